"""The roof engine.

Cohomology of a projectivized rank-r bundle over a quadric base is presented
as the free module over the base ring on 1, xi, ..., xi^(r-1), with the
degree-r relation

    xi^r = c_1 xi^(r-1) - c_2 xi^(r-2) + ... + (-1)^(r+1) c_r

folding higher powers down.  On top of that normal form this module builds
the middle intersection lattice of a hyperplane section, the pushforward
class of the polarized zero locus, the side-switching substitution
L -> xi - L~ across the two bundle structures, and the residue scan that
obstructs an isomorphism of the two polarized surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Optional, Sequence

from . import latticecore
from .gradedring import (
    ChernVector,
    GradedClass,
    IntegralityError,
    RingPresentation,
    integrate,
)


class RoofError(ValueError):
    """Base class for roof-side errors."""


class InvalidRoofError(RoofError):
    """Inconsistent roof data (ranks, dimensions, polarization degree)."""


class DegreeMismatchError(RoofError):
    """Operands have degrees incompatible with the requested pairing."""


class DegenerateBasisError(RoofError):
    """A declared middle basis is degenerate under the intersection pairing."""


class UnexpectedRankError(RoofError):
    """The orthogonal complement of the pullback sublattice is not rank one."""


class SwitchError(RoofError):
    """A class is not expressible as a rational polynomial in (L, xi)."""


# ---------------------------------------------------------------------------
# sides and bundle classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RoofSide:
    """One projective-bundle structure: base ring, rank, relation coefficients.

    ``groth_coeffs[i-1]`` is the degree-i coefficient c_i of the defining
    relation; for sides built from Chern data these are the Chern classes of
    the twisted bundle.  ``middle_basis`` lists the monomials (base label,
    xi exponent) spanning the middle algebraic cohomology of a hyperplane
    section.
    """

    name: str
    base: RingPresentation
    rank: int
    groth_coeffs: tuple[GradedClass, ...]
    middle_basis: Optional[tuple[tuple[str, int], ...]] = None

    def __post_init__(self):
        if self.rank < 1:
            raise InvalidRoofError("rank must be positive")
        if len(self.groth_coeffs) != self.rank:
            raise InvalidRoofError("need exactly rank relation coefficients")
        for i, c in enumerate(self.groth_coeffs, start=1):
            if c.ring is not self.base or c.degree != i:
                raise InvalidRoofError(f"relation coefficient {i} must live on the base in degree {i}")

    @property
    def dim_total(self) -> int:
        return self.base.dimension + self.rank - 1

    @property
    def middle_codim(self) -> int:
        d = self.dim_total - 1
        if d % 2:
            raise InvalidRoofError("hyperplane section has odd-dimensional middle cohomology")
        return d // 2

    def relation_string(self) -> str:
        terms = [f"xi^{self.rank}"]
        for i, c in enumerate(self.groth_coeffs, start=1):
            e = self.rank - i
            xi = "" if e == 0 else ("*xi" if e == 1 else f"*xi^{e}")
            body = f"({c})" if len(c.coeffs) > 1 else str(c)
            terms.append(("- " if i % 2 == 1 else "+ ") + body + xi)
        return " ".join(terms) + " = 0"


def build_side_from_chern(
    base: RingPresentation,
    c: ChernVector,
    name: str = "side",
    middle_basis: Optional[Sequence[tuple[str, int]]] = None,
) -> RoofSide:
    """Side of a roof from the Chern data of the (already twisted) bundle."""
    if c.ring is not base:
        raise InvalidRoofError("Chern data must live on the declared base")
    if c.rank > base.dimension:
        raise InvalidRoofError("bundle rank exceeds what the base dimension supports")
    return RoofSide(name, base, c.rank, tuple(c.components),
                    tuple(tuple(m) for m in middle_basis) if middle_basis else None)


class BundleClass:
    """Normal form sum_(i < r) xi^i * (base class of degree d - i)."""

    __slots__ = ("side", "degree", "parts")

    def __init__(self, side: RoofSide, degree: int, parts: Sequence[GradedClass]):
        if len(parts) != side.rank:
            raise RoofError("normal form needs exactly rank xi-components")
        for i, p in enumerate(parts):
            if not p.is_zero and p.degree != degree - i:
                raise RoofError(f"xi^{i} component has degree {p.degree}, expected {degree - i}")
        self.side = side
        self.degree = degree
        self.parts = tuple(parts)

    @property
    def is_zero(self) -> bool:
        return all(p.is_zero for p in self.parts)

    @property
    def is_integral(self) -> bool:
        return all(p.is_integral for p in self.parts)

    def assert_integral(self) -> "BundleClass":
        if not self.is_integral:
            raise IntegralityError(f"non-integral bundle class {self}")
        return self

    def _check(self, other: "BundleClass") -> None:
        if self.side is not other.side:
            raise RoofError("bundle classes live on different roof sides")

    def __add__(self, other: "BundleClass") -> "BundleClass":
        self._check(other)
        if self.degree != other.degree:
            raise RoofError("cannot add bundle classes of different degrees")
        return BundleClass(self.side, self.degree,
                           [a + b for a, b in zip(self.parts, other.parts)])

    def __sub__(self, other: "BundleClass") -> "BundleClass":
        return self + (-other)

    def __neg__(self) -> "BundleClass":
        return BundleClass(self.side, self.degree, [-p for p in self.parts])

    def scale(self, c) -> "BundleClass":
        return BundleClass(self.side, self.degree, [p.scale(c) for p in self.parts])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms: dict[int, GradedClass] = {}
        for i, p in enumerate(self.parts):
            if p.is_zero:
                continue
            for j, q in enumerate(other.parts):
                if q.is_zero:
                    continue
                prod = p * q
                cur = terms.get(i + j)
                terms[i + j] = prod if cur is None else cur + prod
        return reduce(self.side, terms, degree=self.degree + other.degree)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BundleClass):
            return NotImplemented
        return (self.side is other.side and self.degree == other.degree
                and all(a == b for a, b in zip(self.parts, other.parts)))

    def __str__(self):
        terms = []
        for i in range(self.side.rank - 1, -1, -1):
            p = self.parts[i]
            if p.is_zero:
                continue
            xi = "" if i == 0 else ("xi" if i == 1 else f"xi^{i}")
            for label, c in p.sorted_items():
                body = label if label != p.ring.unit_label else ""
                stem = "*".join(x for x in (body, xi) if x) or "1"
                if c == 1 and stem != "1":
                    terms.append(stem)
                elif c == -1 and stem != "1":
                    terms.append(f"-{stem}")
                elif stem == "1":
                    terms.append(str(c))
                else:
                    terms.append(f"{c}*{stem}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"<{self} : codim {self.degree} on {self.side.name}>"


def zero_class(side: RoofSide, degree: int) -> BundleClass:
    return BundleClass(side, degree, [side.base.zero(degree - i) for i in range(side.rank)])


def monomial(side: RoofSide, label: str, xi_exp: int) -> BundleClass:
    """The class (base basis element) * xi^e, reduced to normal form."""
    return reduce(side, {xi_exp: side.base.basis_class(label)})


def xi_power(side: RoofSide, e: int) -> BundleClass:
    return reduce(side, {e: side.base.unit()})


def pullback(side: RoofSide, a: GradedClass) -> BundleClass:
    return reduce(side, {0: a})


def reduce(
    side: RoofSide, expression: Mapping[int, GradedClass], degree: Optional[int] = None
) -> BundleClass:
    """Fold a formal polynomial in xi with base-class coefficients to normal form.

    Repeatedly substitutes the degree-r relation for the highest xi power;
    equality in the bundle ring is preserved at every step.
    """
    terms: dict[int, GradedClass] = {}
    for e, cls in expression.items():
        if e < 0:
            raise RoofError("negative xi exponent")
        if cls.is_zero:
            continue
        cur = terms.get(e)
        terms[e] = cls if cur is None else cur + cls
    if degree is None:
        degree = next((e + cls.degree for e, cls in terms.items()), 0)
    for e, cls in terms.items():
        if e + cls.degree != degree:
            raise RoofError("expression is not homogeneous")

    r = side.rank
    while True:
        top = max((e for e, cls in terms.items() if e >= r and not cls.is_zero), default=None)
        if top is None:
            break
        cls = terms.pop(top)
        for i, coeff in enumerate(side.groth_coeffs, start=1):
            piece = (cls * coeff).scale((-1) ** (i + 1))
            tgt = top - i
            cur = terms.get(tgt)
            terms[tgt] = piece if cur is None else cur + piece

    parts = []
    for i in range(r):
        cls = terms.get(i)
        if cls is None or degree - i > side.base.dimension or degree - i < 0:
            cls = side.base.zero(degree - i)
        parts.append(cls)
    return BundleClass(side, degree, parts)


# ---------------------------------------------------------------------------
# pushforward and the middle lattice
# ---------------------------------------------------------------------------

def pushforward_to_base(side: RoofSide, a: BundleClass) -> GradedClass:
    """The fiber integral: the xi^(r-1) coefficient of the normal form."""
    if a.side is not side:
        raise RoofError("class does not live on the requested side")
    return a.parts[side.rank - 1]


def integrate_over_total(a: BundleClass) -> Fraction:
    """Integral over the total space (pushforward, then base integral)."""
    return integrate(pushforward_to_base(a.side, a))


def pairing_on_M(side: RoofSide, a: BundleClass, b: BundleClass) -> int:
    """Intersection number of two classes on the hyperplane section, int_X a.b.xi."""
    if a.side is not side or b.side is not side:
        raise RoofError("classes do not live on the requested side")
    if a.degree + b.degree + 1 != side.dim_total:
        raise DegreeMismatchError(
            f"codimensions {a.degree} + {b.degree} + 1 != dim X = {side.dim_total}")
    val = integrate_over_total(a * b * xi_power(side, 1))
    if val.denominator != 1:
        raise IntegralityError(f"non-integral intersection number {val}")
    return int(val)


@dataclass(frozen=True)
class MiddleLattice:
    """Declared middle basis with its exact integer intersection matrix."""

    side: RoofSide
    monomials: tuple[tuple[str, int], ...]
    classes: tuple[BundleClass, ...]
    gram: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.monomials)

    def determinant(self) -> int:
        return latticecore.det([list(r) for r in self.gram])


def middle_lattice(side: RoofSide) -> MiddleLattice:
    """Gram matrix of the declared middle basis under the hyperplane-section pairing."""
    if side.middle_basis is None:
        raise RoofError(f"side {side.name!r} declares no middle basis")
    mc = side.middle_codim
    classes = []
    for label, e in side.middle_basis:
        if not 0 <= e < side.rank:
            raise RoofError(f"middle monomial xi exponent {e} outside [0, {side.rank - 1}]")
        cls = monomial(side, label, e)
        if cls.degree != mc:
            raise RoofError(f"middle monomial {label}*xi^{e} has codimension {cls.degree}, expected {mc}")
        classes.append(cls)
    gram = tuple(
        tuple(pairing_on_M(side, a, b) for b in classes) for a in classes
    )
    lat = MiddleLattice(side, tuple(tuple(m) for m in side.middle_basis), tuple(classes), gram)
    if lat.determinant() == 0:
        raise DegenerateBasisError("declared middle basis is degenerate under the pairing")
    return lat


def class_from_coordinates(lat: MiddleLattice, coords: Sequence) -> BundleClass:
    out = zero_class(lat.side, lat.side.middle_codim)
    for c, cls in zip(coords, lat.classes):
        out = out + cls.scale(c)
    return out


def coordinates_in_lattice(lat: MiddleLattice, a: BundleClass) -> tuple[Fraction, ...]:
    """Coordinates of a middle-degree class in the declared monomial basis.

    Requires the basis to exhaust the monomials supporting the class; the
    reconstruction is verified exactly.
    """
    if a.degree != lat.side.middle_codim:
        raise DegreeMismatchError("class is not of middle degree")
    coords = []
    for label, e in lat.monomials:
        coords.append(a.parts[e].coefficient(label))
    if class_from_coordinates(lat, coords) != a:
        raise RoofError("class is not supported on the declared middle basis")
    return tuple(coords)


# ---------------------------------------------------------------------------
# roof configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RoofConfig:
    """Two projective-bundle structures glued along xi = L + L~ (k = 1).

    ``declared_locus_signs`` records, per side, the sign of the declared
    pushforward-locus representative relative to the positivity-normalized
    one; it only affects which representatives the residue report echoes.
    """

    name: str
    side: RoofSide
    tilde_side: RoofSide
    polarization_degree: int
    declared_locus_signs: tuple[int, int] = (1, 1)

    def __post_init__(self):
        if self.side.rank != self.tilde_side.rank:
            raise InvalidRoofError("the two sides must have equal rank")
        if self.side.dim_total != self.tilde_side.dim_total:
            raise InvalidRoofError("the two sides must have equal total-space dimension")
        for s in (self.side, self.tilde_side):
            d = cy_degree(s)
            if d != self.polarization_degree:
                raise InvalidRoofError(
                    f"declared polarization degree {self.polarization_degree} != computed {d} on {s.name!r}")

    @property
    def rank(self) -> int:
        return self.side.rank

    @property
    def n(self) -> int:
        return self.side.base.dimension

    def other(self, side: RoofSide) -> RoofSide:
        if side is self.side:
            return self.tilde_side
        if side is self.tilde_side:
            return self.side
        raise RoofError("side does not belong to this configuration")

    def swap(self) -> "RoofConfig":
        return RoofConfig(self.name + "-swapped", self.tilde_side, self.side,
                          self.polarization_degree, self.declared_locus_signs[::-1])


def cy_degree(side: RoofSide) -> int:
    """Degree of the polarized zero locus: integral of c_r * L^(n-r) over the base."""
    n, r = side.base.dimension, side.rank
    if n - r < 0:
        raise InvalidRoofError("rank exceeds base dimension")
    val = integrate(side.groth_coeffs[r - 1] * side.base.l_power(n - r))
    if val.denominator != 1:
        raise IntegralityError(f"non-integral zero-locus degree {val}")
    return int(val)


# ---------------------------------------------------------------------------
# locus pushforward class
# ---------------------------------------------------------------------------

def _normalization_monomial(side: RoofSide) -> BundleClass:
    """xi^(r-1) * L, the nef monomial used to fix the sign of the locus class."""
    h = side.base.hyperplane
    if h is None:
        raise RoofError(f"base ring {side.base.name!r} has no hyperplane class")
    return reduce(side, {side.rank - 1: h})


def locus_pushforward_class(side: RoofSide) -> BundleClass:
    """Primitive generator of the orthogonal complement of the pullback sublattice.

    The pullback sublattice is spanned by the middle-basis monomials of
    xi-exponent at most r - 2.  The generator's sign is normalized so that
    its pairing with xi^(r-1) * L is strictly positive.
    """
    lat = middle_lattice(side)
    sub = [
        [int(i == k) for k in range(lat.rank)]
        for i, (_, e) in enumerate(lat.monomials)
        if e <= side.rank - 2
    ]
    kernel = latticecore.orthogonal_kernel([list(r) for r in lat.gram], sub)
    if len(kernel) != 1:
        raise UnexpectedRankError(
            f"orthogonal complement of the pullback sublattice has rank {len(kernel)}, expected 1")
    cls = class_from_coordinates(lat, kernel[0]).assert_integral()
    p = pairing_on_M(side, cls, _normalization_monomial(side))
    if p == 0:
        raise UnexpectedRankError("locus class pairs to zero with the normalization monomial")
    if p < 0:
        cls = -cls
    return cls


def locus_coordinates(side: RoofSide) -> tuple[int, ...]:
    lat = middle_lattice(side)
    return tuple(int(c) for c in coordinates_in_lattice(lat, locus_pushforward_class(side)))


def polarized_sign_check(config: RoofConfig, which: str = "side") -> int:
    """Self-pairing of the locus class; equals (-1)^(r-1) times the locus degree."""
    side = config.side if which == "side" else config.tilde_side
    cls = locus_pushforward_class(side)
    return pairing_on_M(side, cls, cls)


# ---------------------------------------------------------------------------
# side switching
# ---------------------------------------------------------------------------

def _degree_slots(side: RoofSide, d: int) -> list[tuple[int, str]]:
    return [
        (e, label)
        for e in range(side.rank)
        for label in side.base.degree_labels.get(d - e, ())
    ]


def _flatten(side: RoofSide, a: BundleClass, slots) -> list[Fraction]:
    return [a.parts[e].coefficient(label) for e, label in slots]


def _l_xi_monomials(side: RoofSide, d: int) -> list[tuple[tuple[int, int], BundleClass]]:
    """Normal forms of the monomials L^(d-q) * xi^q spanning the (L, xi)-subring."""
    out = []
    for q in range(d + 1):
        base = side.base.l_power(d - q)
        if base.is_zero:
            continue
        out.append(((d - q, q), reduce(side, {q: base}, degree=d)))
    return out


def _solve_rational(columns: list[list[Fraction]], target: list[Fraction]):
    """Particular solution (free variables zero) and kernel basis of A x = b."""
    rows, ncols = len(target), len(columns)
    a = [[columns[j][i] for j in range(ncols)] + [target[i]] for i in range(rows)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [a[i][k] - f * a[r][k] for k in range(ncols + 1)]
        pivots.append(c)
        r += 1
    if any(a[i][ncols] != 0 for i in range(r, rows)):
        return None
    solution = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        solution[c] = a[i][ncols]
    kernel = []
    free = [c for c in range(ncols) if c not in pivots]
    for c in free:
        vec = [Fraction(0)] * ncols
        vec[c] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -a[i][c]
        kernel.append(vec)
    return solution, kernel


def _lift_to_l_xi(side: RoofSide, a: BundleClass):
    """Rational (L, xi)-polynomials with normal form a: one solution plus the kernel.

    Raises SwitchError when no polynomial in (L, xi) represents the class
    modulo the relation.
    """
    monos = _l_xi_monomials(side, a.degree)
    slots = _degree_slots(side, a.degree)
    columns = [_flatten(side, cls, slots) for _, cls in monos]
    res = _solve_rational(columns, _flatten(side, a, slots))
    if res is None:
        raise SwitchError(f"{a} is not expressible as a polynomial in (L, xi)")
    solution, kernel = res
    keys = [key for key, _ in monos]
    to_poly = lambda vec: {k: c for k, c in zip(keys, vec) if c}
    return to_poly(solution), [to_poly(v) for v in kernel]


def _substitute(target: RoofSide, l_poly: Mapping[tuple[int, int], Fraction], degree: int) -> BundleClass:
    """Apply L -> xi - L~ to an (L, xi)-polynomial and reduce on the target side."""
    expanded: dict[tuple[int, int], Fraction] = {}
    for (p, q), c in l_poly.items():
        for k in range(p + 1):
            key = (k, q + p - k)
            expanded[key] = expanded.get(key, Fraction(0)) + c * comb(p, k) * (-1) ** k
    terms: dict[int, GradedClass] = {}
    for (k, q), c in expanded.items():
        piece = target.base.l_power(k).scale(c)
        if piece.is_zero:
            continue
        cur = terms.get(q)
        terms[q] = piece if cur is None else cur + piece
    return reduce(target, terms, degree=degree)


def switch_side(config: RoofConfig, a: BundleClass) -> BundleClass:
    """Carry a class across the roof through the substitution L -> xi - L~.

    The class must be representable as a rational polynomial in (L, xi)
    modulo the relation (any representative; for ambiguous lifts the
    relation-compatibility of the two sides is verified first).  The result
    is reduced with the other side's relation and asserted integral.
    """
    source = a.side
    target = config.other(source)
    l_poly, kernel = _lift_to_l_xi(source, a)
    for null_poly in kernel:
        if not _substitute(target, null_poly, a.degree).is_zero:
            raise InvalidRoofError(
                "the two sides are inconsistent under the hyperplane substitution")
    out = _substitute(target, l_poly, a.degree)
    return out.assert_integral()


# ---------------------------------------------------------------------------
# rank bookkeeping of the hyperplane-section decomposition
# ---------------------------------------------------------------------------

def quadric_betti(n: int, j: int) -> int:
    """Rank of H^j (topological degree) of the n-dimensional smooth quadric."""
    if j % 2 or j < 0 or j > 2 * n:
        return 0
    return 1 + (1 if n % 2 == 0 and j == n else 0)


_K3_BETTI = {0: 1, 2: 22, 4: 1}


def cayley_rank_decomposition(config: RoofConfig, k: int) -> list[int]:
    """Ranks of the direct sum decomposing H^k of the hyperplane section.

    The first r - 1 entries are ranks of H^(k - 2i) of the base; the last is
    the rank of H^(k - 2r + 2) of the polarized surface (22 in its middle
    degree).
    """
    n, r = config.n, config.rank
    if not 0 <= k <= 2 * (n + r - 2):
        raise DegreeMismatchError(f"degree {k} outside [0, {2 * (n + r - 2)}]")
    ranks = [quadric_betti(n, k - 2 * i) for i in range(r - 1)]
    ranks.append(_K3_BETTI.get(k - 2 * r + 2, 0))
    return ranks


# ---------------------------------------------------------------------------
# residue scan (discriminant-group comparison)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResidueScan:
    """Outcome of the divisibility scan comparing the two locus classes.

    ``residue_set`` collects k mod d with (j - k*j~)/d integral, computed
    with positivity-normalized representatives; ``witnesses`` holds the
    integral quotient for both integer representatives of each residue.  The
    ``declared_*`` fields repeat the scan with the declared-representative signs
    of the configuration.
    """

    degree: int
    j_coords: tuple[int, ...]
    jt_coords: tuple[int, ...]
    residue_set: tuple[int, ...]
    sign_orbit: tuple[int, ...]
    iso_obstructed: bool
    witnesses: tuple[tuple[int, tuple[int, ...]], ...]
    declared_residue_set: tuple[int, ...]
    declared_witnesses: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def declared_witness(self) -> tuple[int, tuple[int, ...]]:
        """The declared-convention witness with the smallest coefficients."""
        return min(
            self.declared_witnesses,
            key=lambda kw: (max(map(abs, kw[1]), default=0), sum(map(abs, kw[1])), abs(kw[0]), kw[0]),
        )


def _divisibility_scan(j, jt, d):
    residues, witnesses = [], []
    for k in range(d):
        for rep in (k, k - d) if k or d == 1 else (0,):
            diff = [j[i] - rep * jt[i] for i in range(len(j))]
            if all(x % d == 0 for x in diff):
                if k not in residues:
                    residues.append(k)
                witnesses.append((rep, tuple(x // d for x in diff)))
    return tuple(residues), tuple(witnesses)


def residue_scan(config: RoofConfig) -> ResidueScan:
    """Scan k = 0..d-1 for integrality of (j - k*j~)/d in the tilde middle lattice.

    j is the side locus class carried across the roof, j~ the tilde side's
    own locus class; d is the polarization degree.  The isomorphism of
    discriminant groups is obstructed iff no residue in the +-1 orbit occurs.
    """
    d = config.polarization_degree
    j_cls = switch_side(config, locus_pushforward_class(config.side))
    lat_t = middle_lattice(config.tilde_side)
    j = tuple(int(c) for c in coordinates_in_lattice(lat_t, j_cls))
    jt = locus_coordinates(config.tilde_side)

    residue_set, witnesses = _divisibility_scan(j, jt, d)
    orbit = sorted({k % d for k in residue_set} | {(-k) % d for k in residue_set})
    obstructed = not ({1 % d, (-1) % d} & set(orbit))

    s, st = config.declared_locus_signs
    sj = tuple(s * x for x in j)
    sjt = tuple(st * x for x in jt)
    declared_residues, declared_witnesses = _divisibility_scan(sj, sjt, d)

    return ResidueScan(
        degree=d,
        j_coords=j,
        jt_coords=jt,
        residue_set=residue_set,
        sign_orbit=tuple(orbit),
        iso_obstructed=obstructed,
        witnesses=witnesses,
        declared_residue_set=declared_residues,
        declared_witnesses=declared_witnesses,
    )
