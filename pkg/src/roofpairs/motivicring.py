"""Polynomial arithmetic in a fragment of the Grothendieck ring of varieties.

The fragment is the free commutative ring on six formal symbols: the class
``L`` of the affine line and the classes of the two surfaces, two bases and
the hyperplane section of a roof.  Everything is kept in canonical expanded
form (sorted integer-coefficient monomials) so equality is coefficient-wise.

The point of the module is the piecewise-fibration bookkeeping: the two
projective-bundle descriptions of the hyperplane-section class cancel to an
identity annihilating the surface-class difference against a power of L,
checked here as an exact polynomial identity for each concrete rank.
"""

from __future__ import annotations

from typing import Mapping

SYMBOLS = ("L", "Y", "Yt", "B", "Bt", "M")
_INDEX = {s: i for i, s in enumerate(SYMBOLS)}


class MotivicPoly:
    """Multivariate integer polynomial in the fixed symbol set, canonical form."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, ...], int] = ()):
        clean: dict[tuple[int, ...], int] = {}
        for mono, c in dict(coeffs).items():
            if len(mono) != len(SYMBOLS) or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono}")
            c = int(c)
            if c:
                clean[tuple(mono)] = c
        self.coeffs = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def var(cls, name: str) -> "MotivicPoly":
        if name not in _INDEX:
            raise ValueError(f"unknown symbol {name!r}; choose from {SYMBOLS}")
        mono = tuple(int(i == _INDEX[name]) for i in range(len(SYMBOLS)))
        return cls({mono: 1})

    @classmethod
    def const(cls, c: int) -> "MotivicPoly":
        return cls({(0,) * len(SYMBOLS): int(c)})

    # -- ring structure -------------------------------------------------------

    def _coerce(self, other) -> "MotivicPoly":
        if isinstance(other, MotivicPoly):
            return other
        if isinstance(other, int):
            return MotivicPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return MotivicPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MotivicPoly({m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MotivicPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not in the ring")
        out = MotivicPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def substitute(self, assignments: Mapping[str, "MotivicPoly"]) -> "MotivicPoly":
        """Ring homomorphism sending each named symbol to the given polynomial."""
        out = MotivicPoly()
        for mono, c in self.coeffs.items():
            term = MotivicPoly.const(c)
            for sym, e in zip(SYMBOLS, mono):
                if not e:
                    continue
                base = assignments.get(sym, MotivicPoly.var(sym))
                term = term * base ** e
            out = out + term
        return out

    def sorted_items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.coeffs.items(), key=lambda mc: (sum(mc[0]), mc[0]))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for mono, c in self.sorted_items():
            body = "*".join(
                s if e == 1 else f"{s}^{e}" for s, e in zip(SYMBOLS, mono) if e
            )
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"MotivicPoly({self})"


L = MotivicPoly.var("L")
Y = MotivicPoly.var("Y")
Y_TILDE = MotivicPoly.var("Yt")
B = MotivicPoly.var("B")
B_TILDE = MotivicPoly.var("Bt")


class InvalidRankError(ValueError):
    """Fibration rank below 2."""


def proj_class(k: int) -> MotivicPoly:
    """Class of projective k-space: 1 + L + ... + L^k.

    >>> str(proj_class(2))
    '1 + L + L^2'
    """
    if k < 0:
        raise ValueError("projective space dimension must be nonnegative")
    out = MotivicPoly.const(0)
    for i in range(k + 1):
        out = out + L ** i
    return out


def fibration_class(r: int) -> MotivicPoly:
    """Class of the hyperplane section of a rank-r roof side, expanded.

    The fibers jump from P^(r-2) to P^(r-1) exactly over the surface:
    [M] = [P^(r-1)][Y] + [P^(r-2)]([B] - [Y]).
    """
    if r < 2:
        raise InvalidRankError(f"rank must be at least 2, got {r}")
    return proj_class(r - 1) * Y + proj_class(r - 2) * (B - Y)


def l_equivalence_residual(r: int) -> MotivicPoly:
    """Difference of the two fibration descriptions of the section class.

    Identically ([Y] - [Y~]) * L^(r-1) + [P^(r-2)] * ([B] - [B~]); whenever
    the two bases have equal class, the surface-class difference is
    annihilated by L^(r-1).
    """
    tilde = fibration_class(r).substitute({"Y": Y_TILDE, "B": B_TILDE})
    return fibration_class(r) - tilde
