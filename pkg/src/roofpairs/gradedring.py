"""Exact arithmetic in finite graded commutative quotient rings.

A ring is presented by a finite graded basis together with an integer
multiplication table; all class coefficients are exact rationals.  The two
families shipped here are the cohomology rings of smooth quadric
hypersurfaces (odd and even dimensional), graded by codimension, but the
presentation machinery is generic: any finite graded basis with a
commutative, associative integer table will do.

Conventions for the quadric ring of dimension ``2m+1``::

    basis  1, L, ..., L^m, Pi, Pi*L, ..., Pi*L^m
    L^(m+1) = 2*Pi            (Pi is the class of a maximal linear space)
    point class = Pi*L^m      (integral of L^(2m+1) is 2)

and for dimension ``2m``::

    basis  1, L, ..., L^(m-1), Pi1, Pi2, Pi1*L, ..., Pi1*L^m
    L^m = Pi1 + Pi2,  Pi1*L = Pi2*L
    Pi1*Pi2 = point and Pi_i^2 = 0   if m is odd
    Pi_i^2 = point and Pi1*Pi2 = 0   if m is even
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Optional, Sequence


class GradedRingError(ValueError):
    """Base class for graded-ring construction and arithmetic errors."""


class InvalidDimensionError(GradedRingError):
    """Quadric dimension out of range."""


class IncompatibleRingError(GradedRingError):
    """Operands belong to different ring presentations."""


class IntegralityError(GradedRingError):
    """A class asserted to be integral has a non-integer coefficient."""


@dataclass(frozen=True)
class BasisElement:
    """One named basis class; ``degree`` is codimension (half the topological degree)."""

    label: str
    degree: int


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise GradedRingError(f"coefficients must be exact integers or Fractions, got {type(x).__name__}")


class RingPresentation:
    """A finite graded commutative ring with explicit integer multiplication table.

    ``table`` maps unordered pairs of non-unit basis labels to integer linear
    combinations of basis labels (products with the unit are implicit, and
    products whose total degree exceeds ``dimension`` must be absent or
    empty).  The table is validated at construction: gradedness,
    commutativity, associativity on all basis triples, uniqueness of the top
    class, and proportionality to the point class in complementary degrees.
    """

    def __init__(
        self,
        name: str,
        dimension: int,
        basis: Sequence[BasisElement],
        point_label: str,
        table: Mapping[tuple[str, str], Mapping[str, int]],
        hyperplane_form: Optional[Mapping[str, Fraction]] = None,
        l_powers: Optional[Sequence[Mapping[str, Fraction]]] = None,
        l_forms: Optional[Mapping[str, tuple[int, Fraction]]] = None,
        fano_index: Optional[int] = None,
    ):
        self.name = name
        self.dimension = dimension
        self.basis = tuple(basis)
        self.point_label = point_label
        self.fano_index = fano_index

        labels = [b.label for b in self.basis]
        if len(set(labels)) != len(labels):
            raise GradedRingError(f"duplicate basis labels in {name!r}")
        self._by_label = {b.label: b for b in self.basis}
        for b in self.basis:
            if not 0 <= b.degree <= dimension:
                raise GradedRingError(f"basis degree {b.degree} outside [0, {dimension}]")
        units = [b for b in self.basis if b.degree == 0]
        if len(units) != 1:
            raise GradedRingError("presentation needs exactly one degree-0 (unit) element")
        self.unit_label = units[0].label
        tops = [b for b in self.basis if b.degree == dimension]
        if len(tops) != 1 or tops[0].label != point_label:
            raise GradedRingError("exactly one top-degree basis element, the point class, is required")

        self._order = {b.label: i for i, b in enumerate(self.basis)}
        self.degree_labels: dict[int, tuple[str, ...]] = {}
        for b in self.basis:
            self.degree_labels.setdefault(b.degree, ())
            self.degree_labels[b.degree] += (b.label,)
        self._table: dict[tuple[str, str], dict[str, int]] = {}
        for (x, y), combo in table.items():
            self._table[self._key(x, y)] = {k: int(v) for k, v in combo.items() if v}

        self._validate_table()

        self.hyperplane = (
            GradedClass(self, 1, dict(hyperplane_form)) if hyperplane_form is not None else None
        )
        # L^p expressed on the basis, p = 0 .. dimension (beyond is zero).
        self._l_powers = tuple(dict(p) for p in l_powers) if l_powers is not None else None
        # basis label -> (p, c) meaning the element equals c * L^p, when such a form exists
        self._l_forms = dict(l_forms) if l_forms is not None else None

    def _key(self, x: str, y: str) -> tuple[str, str]:
        return (x, y) if self._order[x] <= self._order[y] else (y, x)

    def degree_of(self, label: str) -> int:
        return self._by_label[label].degree

    def basis_product(self, x: str, y: str) -> dict[str, int]:
        """Product of two basis elements as an integer combination of basis labels."""
        if x == self.unit_label:
            return {y: 1}
        if y == self.unit_label:
            return {x: 1}
        if self.degree_of(x) + self.degree_of(y) > self.dimension:
            return {}
        try:
            return self._table[self._key(x, y)]
        except KeyError:
            raise GradedRingError(f"multiplication table of {self.name!r} lacks {x!r} * {y!r}") from None

    def _validate_table(self) -> None:
        labels = [b.label for b in self.basis]
        # gradedness and completeness
        for x in labels:
            for y in labels:
                d = self.degree_of(x) + self.degree_of(y)
                prod = self.basis_product(x, y)
                if d > self.dimension and prod:
                    raise GradedRingError(f"{x}*{y} exceeds top degree but is nonzero")
                for z in prod:
                    if self.degree_of(z) != d:
                        raise GradedRingError(f"{x}*{y} is not graded: contains {z}")
                if d == self.dimension and any(z != self.point_label for z in prod):
                    raise GradedRingError(f"{x}*{y} in top degree is not a multiple of the point class")
        # associativity on all basis triples, exactly
        for x in labels:
            for y in labels:
                for z in labels:
                    left = self._combo_times_label(self.basis_product(x, y), z)
                    right = self._combo_times_label(self.basis_product(y, z), x)
                    if left != right:
                        raise GradedRingError(f"table not associative at ({x}, {y}, {z})")

    def _combo_times_label(self, combo: Mapping[str, int], z: str) -> dict[str, int]:
        out: dict[str, int] = {}
        for w, c in combo.items():
            for v, d in self.basis_product(w, z).items():
                out[v] = out.get(v, 0) + c * d
        return {k: v for k, v in out.items() if v}

    # -- constructors for classes ------------------------------------------

    def zero(self, degree: int) -> "GradedClass":
        return GradedClass(self, degree, {})

    def unit(self) -> "GradedClass":
        return GradedClass(self, 0, {self.unit_label: Fraction(1)})

    def basis_class(self, label: str) -> "GradedClass":
        b = self._by_label[label]
        return GradedClass(self, b.degree, {label: Fraction(1)})

    def l_power(self, p: int) -> "GradedClass":
        """The class of L^p on the basis (zero beyond the top degree)."""
        if self._l_powers is None:
            raise GradedRingError(f"{self.name!r} carries no hyperplane-power data")
        if p < 0:
            raise GradedRingError("negative power of the hyperplane class")
        if p > self.dimension:
            return self.zero(p)
        return GradedClass(self, p, dict(self._l_powers[p]))

    def l_form(self, label: str) -> Optional[tuple[int, Fraction]]:
        """``(p, c)`` with ``basis_class(label) == c * L^p`` when such a form exists."""
        if self._l_forms is None:
            return None
        return self._l_forms.get(label)

    def __repr__(self):
        return f"RingPresentation({self.name!r}, dim={self.dimension}, basis={len(self.basis)})"


class GradedClass:
    """A homogeneous class: exact rational coefficients over basis labels of one degree."""

    __slots__ = ("ring", "degree", "coeffs")

    def __init__(self, ring: RingPresentation, degree: int, coeffs: Mapping[str, Fraction]):
        self.ring = ring
        self.degree = degree
        clean: dict[str, Fraction] = {}
        for label, c in coeffs.items():
            c = _as_fraction(c)
            if c == 0:
                continue
            if ring.degree_of(label) != degree:
                raise GradedRingError(f"coefficient key {label!r} has degree {ring.degree_of(label)}, not {degree}")
            clean[label] = c
        self.coeffs = clean

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def assert_integral(self) -> "GradedClass":
        if not self.is_integral:
            raise IntegralityError(f"non-integral class {self}")
        return self

    def coefficient(self, label: str) -> Fraction:
        return self.coeffs.get(label, Fraction(0))

    # -- arithmetic ----------------------------------------------------------

    def _check_ring(self, other: "GradedClass") -> None:
        if self.ring is not other.ring:
            raise IncompatibleRingError(
                f"classes live in different rings ({self.ring.name!r} vs {other.ring.name!r})"
            )

    def __add__(self, other: "GradedClass") -> "GradedClass":
        self._check_ring(other)
        if self.degree != other.degree:
            raise GradedRingError("cannot add classes of different degrees")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return GradedClass(self.ring, self.degree, out)

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        return self + (-other)

    def __neg__(self) -> "GradedClass":
        return GradedClass(self.ring, self.degree, {k: -v for k, v in self.coeffs.items()})

    def scale(self, c) -> "GradedClass":
        c = _as_fraction(c)
        return GradedClass(self.ring, self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_ring(other)
        d = self.degree + other.degree
        out: dict[str, Fraction] = {}
        if d <= self.ring.dimension:
            for x, c in self.coeffs.items():
                for y, e in other.coeffs.items():
                    for z, m in self.ring.basis_product(x, y).items():
                        out[z] = out.get(z, Fraction(0)) + c * e * m
        return GradedClass(self.ring, d, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.ring is other.ring and self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ring), self.degree, frozenset(self.coeffs.items())))

    def sorted_items(self) -> list[tuple[str, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: self.ring._order[kv[0]])

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for label, c in self.sorted_items():
            body = label if label != self.ring.unit_label else "1"
            if c == 1 and body != "1":
                term = body
            elif c == -1 and body != "1":
                term = f"-{body}"
            elif body == "1":
                term = str(c)
            else:
                term = f"{c}*{body}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"<{self} : deg {self.degree} on {self.ring.name}>"


@dataclass(frozen=True)
class ChernVector:
    """Total Chern data of a rank-r bundle: component i is a degree-i class."""

    rank: int
    components: tuple[GradedClass, ...]

    def __post_init__(self):
        if len(self.components) != self.rank:
            raise GradedRingError("Chern vector length must equal the rank")
        for i, c in enumerate(self.components, start=1):
            if c.degree != i:
                raise GradedRingError(f"component {i} has degree {c.degree}")

    @property
    def ring(self) -> RingPresentation:
        return self.components[0].ring

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


# ---------------------------------------------------------------------------
# quadric rings
# ---------------------------------------------------------------------------

def make_quadric_ring(dim: int, name: Optional[str] = None) -> RingPresentation:
    """Cohomology ring of the smooth quadric of dimension ``dim`` (codimension grading).

    >>> q5 = make_quadric_ring(5)
    >>> str(q5.l_power(3))
    '2*Pi'
    >>> q6 = make_quadric_ring(6)
    >>> str(q6.basis_class("Pi1") * q6.basis_class("Pi2"))
    'Pi1*L^3'
    """
    if dim < 2:
        raise InvalidDimensionError(f"quadric dimension must be >= 2, got {dim}")
    name = name or f"Q{dim}"

    def lpow_label(p: int) -> str:
        return "L" if p == 1 else f"L^{p}"

    def pilab(stem: str, j: int) -> str:
        if j == 0:
            return stem
        return f"{stem}*L" if j == 1 else f"{stem}*L^{j}"

    table: dict[tuple[str, str], dict[str, int]] = {}
    if dim % 2 == 1:
        m = (dim - 1) // 2
        basis = [BasisElement("1", 0)]
        basis += [BasisElement(lpow_label(p), p) for p in range(1, m + 1)]
        basis += [BasisElement(pilab("Pi", j), m + 1 + j) for j in range(0, m + 1)]
        point = pilab("Pi", m)

        def l_power_combo(p: int) -> dict[str, Fraction]:
            if p == 0:
                return {"1": Fraction(1)}
            if p <= m:
                return {lpow_label(p): Fraction(1)}
            return {pilab("Pi", p - m - 1): Fraction(2)}

        # L^i * L^j
        for i in range(1, m + 1):
            for j in range(i, m + 1):
                table[(lpow_label(i), lpow_label(j))] = {
                    k: int(v) for k, v in l_power_combo(i + j).items()
                }
        # L^i * Pi L^j
        for i in range(1, m + 1):
            for j in range(0, m + 1):
                if i + j <= m:
                    table[(lpow_label(i), pilab("Pi", j))] = {pilab("Pi", i + j): 1}
        # Pi L^i * Pi L^j is always beyond the top degree
        l_forms = {lpow_label(p): (p, Fraction(1)) for p in range(1, m + 1)}
        l_forms["1"] = (0, Fraction(1))
        l_forms.update({pilab("Pi", j): (m + 1 + j, Fraction(1, 2)) for j in range(0, m + 1)})
        hyperplane = {"L": Fraction(1)}
    else:
        m = dim // 2
        basis = [BasisElement("1", 0)]
        basis += [BasisElement(lpow_label(p), p) for p in range(1, m)]
        basis += [BasisElement("Pi1", m), BasisElement("Pi2", m)]
        basis += [BasisElement(pilab("Pi1", j), m + j) for j in range(1, m + 1)]
        point = pilab("Pi1", m)
        # the standard parity rule for the two middle classes
        pi_square = 1 if m % 2 == 0 else 0
        pi_cross = 1 - pi_square

        def l_power_combo(p: int) -> dict[str, Fraction]:
            if p == 0:
                return {"1": Fraction(1)}
            if p <= m - 1:
                return {lpow_label(p): Fraction(1)}
            if p == m:
                return {"Pi1": Fraction(1), "Pi2": Fraction(1)}
            return {pilab("Pi1", p - m): Fraction(2)}

        for i in range(1, m):
            for j in range(i, m):
                table[(lpow_label(i), lpow_label(j))] = {
                    k: int(v) for k, v in l_power_combo(i + j).items()
                }
        for i in range(1, m):
            for pi in ("Pi1", "Pi2"):
                table[(lpow_label(i), pi)] = {pilab("Pi1", i): 1}
            for j in range(1, m + 1):
                if i + j <= m:
                    table[(lpow_label(i), pilab("Pi1", j))] = {pilab("Pi1", i + j): 1}
        table[("Pi1", "Pi1")] = {point: pi_square} if pi_square else {}
        table[("Pi2", "Pi2")] = {point: pi_square} if pi_square else {}
        table[("Pi1", "Pi2")] = {point: pi_cross} if pi_cross else {}
        l_forms = {lpow_label(p): (p, Fraction(1)) for p in range(1, m)}
        l_forms["1"] = (0, Fraction(1))
        l_forms.update({pilab("Pi1", j): (m + j, Fraction(1, 2)) for j in range(1, m + 1)})
        # Pi1 and Pi2 individually are not rational multiples of a power of L
        hyperplane = (
            {"L": Fraction(1)} if m >= 2 else {"Pi1": Fraction(1), "Pi2": Fraction(1)}
        )

    l_powers = [l_power_combo(p) for p in range(0, dim + 1)]
    return RingPresentation(
        name,
        dim,
        basis,
        point,
        table,
        hyperplane_form=hyperplane,
        l_powers=l_powers,
        l_forms=l_forms,
        fano_index=dim,
    )


def make_projective_space_ring(dim: int, name: Optional[str] = None) -> RingPresentation:
    """Cohomology ring of P^dim; used by synthetic test configurations."""
    if dim < 1:
        raise InvalidDimensionError(f"projective space dimension must be >= 1, got {dim}")
    name = name or f"P{dim}"

    def lab(p: int) -> str:
        return "1" if p == 0 else ("L" if p == 1 else f"L^{p}")

    basis = [BasisElement(lab(p), p) for p in range(dim + 1)]
    table = {
        (lab(i), lab(j)): ({lab(i + j): 1} if i + j <= dim else {})
        for i in range(1, dim + 1)
        for j in range(i, dim + 1)
    }
    l_powers = [{lab(p): Fraction(1)} for p in range(dim + 1)]
    l_forms = {lab(p): (p, Fraction(1)) for p in range(dim + 1)}
    return RingPresentation(
        name, dim, basis, lab(dim), table,
        hyperplane_form={"L": Fraction(1)}, l_powers=l_powers, l_forms=l_forms,
        fano_index=dim + 1,
    )


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def multiply(a: GradedClass, b: GradedClass) -> GradedClass:
    """Bilinear extension of the multiplication table; degrees add, overflow is zero."""
    return a * b


def integrate(a: GradedClass) -> Fraction:
    """Coefficient of the point class in top degree, 0 in any other degree."""
    if a.degree != a.ring.dimension:
        return Fraction(0)
    return a.coefficient(a.ring.point_label)


def chern_twist(c: ChernVector, t: int, hyperplane: Optional[GradedClass] = None) -> ChernVector:
    """Chern data of E(t) = E tensor O(t): c_k' = sum_i C(r-i, k-i) t^(k-i) h^(k-i) c_i.

    >>> q5 = make_quadric_ring(5)
    >>> c = ChernVector(3, (q5.l_power(1) * 2, q5.l_power(2) * 2, q5.basis_class("Pi") * 2))
    >>> str(chern_twist(c, 1))
    '(5*L, 9*L^2, 12*Pi)'
    """
    ring = c.ring
    if hyperplane is None:
        hyperplane = ring.hyperplane
    if hyperplane is None or hyperplane.degree != 1:
        raise GradedRingError("chern_twist needs a degree-1 hyperplane class")
    r = c.rank
    h_pow = [ring.unit()]
    for _ in range(r):
        h_pow.append(h_pow[-1] * hyperplane)
    comps = [ring.unit()] + list(c.components)  # comps[i] = c_i, c_0 = 1
    out = []
    for k in range(1, r + 1):
        acc = ring.zero(k)
        for i in range(0, k + 1):
            acc = acc + comps[i] * h_pow[k - i] * (comb(r - i, k - i) * t ** (k - i))
        out.append(acc)
    return ChernVector(r, tuple(out))


def validate_mukai_pair(c: ChernVector, base: RingPresentation) -> bool:
    """True iff c_1 equals the Fano index of the base times its hyperplane class."""
    if base.fano_index is None or base.hyperplane is None:
        raise GradedRingError(f"{base.name!r} carries no Fano index data")
    return c.components[0] == base.hyperplane * base.fano_index
