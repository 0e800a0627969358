"""Roof configurations: the two built-in ones and the JSON file format.

A configuration file is a JSON document::

    {
      "name": "g2dagger",
      "rank": 3,
      "base_dim": [5, 5],
      "polarization_degree": 12,
      "sides": [
        {
          "chern": [[["L", 2]], [["L^2", 2]], [["Pi", 2]]],
          "twist": 1,
          "middle_basis": [["Pi", 0], ["L^2", 1], ["L", 2]],
          "declared_locus_sign": 1
        },
        ...
      ]
    }

Each side gives either ``chern`` (components of the untwisted bundle, as
lists of [basis label, integer] pairs, plus an integer ``twist``) or
``groth`` (the relation coefficients of the already-twisted bundle,
degree 1..rank).  ``middle_basis`` lists [base label, xi exponent]
monomials; ``declared_locus_sign`` is the sign of the side's declared locus
representative relative to the positivity-normalized one (default 1).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .gradedring import ChernVector, GradedClass, RingPresentation, chern_twist, make_quadric_ring
from .roofcalc import RoofConfig, RoofSide, build_side_from_chern


class ConfigError(ValueError):
    """Malformed or inconsistent configuration data."""


BUILTIN_CONFIGS: dict[str, dict] = {
    "g2dagger": {
        "name": "g2dagger",
        "rank": 3,
        "base_dim": [5, 5],
        "polarization_degree": 12,
        "sides": [
            {
                "chern": [[["L", 2]], [["L^2", 2]], [["Pi", 2]]],
                "twist": 1,
                "middle_basis": [["Pi", 0], ["L^2", 1], ["L", 2]],
                "declared_locus_sign": 1,
            },
            {
                "chern": [[["L", 2]], [["L^2", 2]], [["Pi", 2]]],
                "twist": 1,
                "middle_basis": [["Pi", 0], ["L^2", 1], ["L", 2]],
                "declared_locus_sign": 1,
            },
        ],
    },
    "d4": {
        "name": "d4",
        "rank": 4,
        "base_dim": [6, 6],
        "polarization_degree": 12,
        "sides": [
            {
                "groth": [
                    [["L", 6]],
                    [["L^2", 14]],
                    [["Pi1", 14], ["Pi2", 16]],
                    [["Pi1*L", 12]],
                ],
                "middle_basis": [["Pi1*L", 0], ["Pi1", 1], ["Pi2", 1], ["L^2", 2], ["L", 3]],
                "declared_locus_sign": -1,
            },
            {
                "groth": [
                    [["L", 6]],
                    [["L^2", 14]],
                    [["Pi1", 14], ["Pi2", 16]],
                    [["Pi1*L", 12]],
                ],
                "middle_basis": [["Pi1*L", 0], ["Pi1", 1], ["Pi2", 1], ["L^2", 2], ["L", 3]],
                "declared_locus_sign": -1,
            },
        ],
    },
}


def builtin_names() -> tuple[str, ...]:
    return tuple(sorted(BUILTIN_CONFIGS))


def _class_from_pairs(ring: RingPresentation, degree: int, pairs: Sequence) -> GradedClass:
    coeffs: dict[str, Fraction] = {}
    for item in pairs:
        try:
            label, value = item
        except (TypeError, ValueError):
            raise ConfigError(f"expected [label, integer] pair, got {item!r}") from None
        coeffs[str(label)] = coeffs.get(str(label), Fraction(0)) + Fraction(int(value))
    try:
        return GradedClass(ring, degree, coeffs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _side_from_dict(data: Mapping, ring: RingPresentation, rank: int, name: str) -> RoofSide:
    middle = data.get("middle_basis")
    middle = tuple((str(lbl), int(e)) for lbl, e in middle) if middle else None
    if "chern" in data and "groth" in data:
        raise ConfigError(f"side {name!r}: give either 'chern' or 'groth', not both")
    if "chern" in data:
        comps = data["chern"]
        if len(comps) != rank:
            raise ConfigError(f"side {name!r}: expected {rank} Chern components")
        c = ChernVector(rank, tuple(
            _class_from_pairs(ring, i, pairs) for i, pairs in enumerate(comps, start=1)))
        c = chern_twist(c, int(data.get("twist", 0)))
        return build_side_from_chern(ring, c, name=name, middle_basis=middle)
    if "groth" in data:
        comps = data["groth"]
        if len(comps) != rank:
            raise ConfigError(f"side {name!r}: expected {rank} relation coefficients")
        coeffs = tuple(
            _class_from_pairs(ring, i, pairs) for i, pairs in enumerate(comps, start=1))
        return RoofSide(name, ring, rank, coeffs, middle)
    raise ConfigError(f"side {name!r}: needs 'chern' or 'groth' data")


def config_from_dict(data: Mapping) -> RoofConfig:
    """Build and validate a RoofConfig from parsed JSON data."""
    try:
        name = str(data["name"])
        rank = int(data["rank"])
        base_dims = [int(d) for d in data["base_dim"]]
        degree = int(data["polarization_degree"])
        sides = data["sides"]
    except KeyError as exc:
        raise ConfigError(f"missing configuration field {exc.args[0]!r}") from None
    if len(base_dims) != 2 or len(sides) != 2:
        raise ConfigError("a roof has exactly two sides")
    rings = [make_quadric_ring(d) for d in base_dims]
    side = _side_from_dict(sides[0], rings[0], rank, f"{name}:side")
    tilde = _side_from_dict(sides[1], rings[1], rank, f"{name}:tilde")
    signs = (int(sides[0].get("declared_locus_sign", 1)), int(sides[1].get("declared_locus_sign", 1)))
    if any(s not in (1, -1) for s in signs):
        raise ConfigError("declared_locus_sign must be +1 or -1")
    try:
        return RoofConfig(name, side, tilde, degree, signs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def builtin_config(name: str) -> RoofConfig:
    try:
        data = BUILTIN_CONFIGS[name]
    except KeyError:
        raise ConfigError(
            f"unknown configuration {name!r}; built-ins: {', '.join(builtin_names())}") from None
    return config_from_dict(data)


def load_config(path: str) -> RoofConfig:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from None
    return config_from_dict(data)


def resolve_config(name: str, path: Optional[str] = None) -> RoofConfig:
    """A named built-in, or any configuration from an explicit file."""
    if path is not None:
        cfg = load_config(path)
        if name and name != cfg.name:
            raise ConfigError(f"file {path} defines {cfg.name!r}, not {name!r}")
        return cfg
    return builtin_config(name)
