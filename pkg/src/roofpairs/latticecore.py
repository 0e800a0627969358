"""Integer-lattice algorithms over arbitrary-precision integers.

Smith normal form with unimodular transforms, discriminant groups of
nondegenerate symmetric forms, saturated orthogonal kernels, an exhaustive
bounded search for hyperbolic-type isotropic pairs, and the change-of-basis
pipeline that extracts the Fourier-Mukai vector of a roof configuration.

Matrices are plain lists of lists of Python ints; everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Matrix = list[list[int]]
Vector = tuple[int, ...]


class LatticeError(ValueError):
    """Base class for lattice-side errors."""


class DegenerateLatticeError(LatticeError):
    """The Gram matrix is singular where a nondegenerate form is required."""


class SearchExhaustedError(LatticeError):
    """No solution inside the requested coordinate box."""


class InconsistencyError(LatticeError):
    """A result asserted to lie in an integer span does not."""


# ---------------------------------------------------------------------------
# basic exact matrix helpers
# ---------------------------------------------------------------------------

def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(rows)]


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Gaussian elimination (exact)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    sign, d = 1, Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            sign = -sign
        d *= a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] / a[i][i]
            a[r] = [a[r][k] - f * a[i][k] for k in range(n)]
    assert d.denominator == 1
    return sign * d.numerator


def unimodular_inverse(m: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i] != 0), None)
        if piv is None:
            raise LatticeError("matrix is singular, not unimodular")
        a[i], a[piv] = a[piv], a[i]
        inv = Fraction(1) / a[i][i]
        a[i] = [x * inv for x in a[i]]
        for r in range(n):
            if r != i and a[r][i] != 0:
                f = a[r][i]
                a[r] = [a[r][k] - f * a[i][k] for k in range(2 * n)]
    out = [[a[i][n + j] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in out for x in row):
        raise LatticeError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..."""

    U: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return tuple(self.D[i][i] for i in range(k))

    def verify(self, m: Sequence[Sequence[int]]) -> bool:
        lhs = mat_mul(mat_mul([list(r) for r in self.U], [list(r) for r in m]), [list(r) for r in self.V])
        if lhs != [list(r) for r in self.D]:
            return False
        if abs(det(self.U)) != 1 or abs(det(self.V)) != 1:
            return False
        facs = [d for d in self.invariant_factors if d]
        return all(facs[i + 1] % facs[i] == 0 for i in range(len(facs) - 1))


def _pivot(a: Matrix, t: int) -> Optional[tuple[int, int]]:
    """Smallest nonzero absolute value in the trailing block, (row, col) tie-break."""
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            if a[i][j] != 0:
                key = (abs(a[i][j]), i, j)
                if best is None or key < best[0]:
                    best = (key, i, j)
    return None if best is None else (best[1], best[2])


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form over Z with both transforms.

    Pivot choice is the smallest nonzero absolute value with (row, column)
    index as tie-break, so the output is deterministic.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def row_op(dst: int, src: int, q: int) -> None:
        for j in range(cols):
            a[dst][j] -= q * a[src][j]
        for j in range(rows):
            u[dst][j] -= q * u[src][j]

    def col_op(dst: int, src: int, q: int) -> None:
        for i in range(rows):
            a[i][dst] -= q * a[i][src]
        for i in range(cols):
            v[i][dst] -= q * v[i][src]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(rows, cols):
        loc = _pivot(a, t)
        if loc is None:
            break
        swap_rows(t, loc[0])
        swap_cols(t, loc[1])
        # one reduction pass; any surviving remainder is strictly smaller than
        # the pivot, so re-pivoting makes the pivot magnitude descend
        incomplete = False
        for i in range(t + 1, rows):
            if a[i][t] != 0:
                row_op(i, t, a[i][t] // a[t][t])
                incomplete = incomplete or a[i][t] != 0
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                col_op(j, t, a[t][j] // a[t][t])
                incomplete = incomplete or a[t][j] != 0
        if incomplete:
            continue
        # divisibility: the pivot must divide the whole trailing block
        offender = next(
            (i for i in range(t + 1, rows)
             if any(a[i][j] % a[t][t] for j in range(t + 1, cols))),
            None,
        )
        if offender is not None:
            row_op(t, offender, -1)  # pulls the offending row in; next pass shrinks the pivot
            continue
        if a[t][t] < 0:
            for j in range(cols):
                a[t][j] = -a[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]
        t += 1

    snf = SmithDecomposition(
        tuple(tuple(r) for r in u), tuple(tuple(r) for r in a), tuple(tuple(r) for r in v)
    )
    assert snf.verify(m), "internal error: Smith decomposition failed to verify"
    return snf


# ---------------------------------------------------------------------------
# discriminant groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscriminantGroup:
    """Finite quotient (dual lattice)/(lattice) as a chain of cyclic factors.

    ``generators[i]`` is an integer vector in dual-basis coordinates whose
    class generates the factor of order ``factors[i]``.
    """

    factors: tuple[int, ...]
    generators: tuple[Vector, ...]

    @property
    def order(self) -> int:
        n = 1
        for d in self.factors:
            n *= d
        return n

    def __str__(self):
        if not self.factors:
            return "trivial"
        return " x ".join(f"Z/{d}" for d in self.factors)


def discriminant_group(gram: Sequence[Sequence[int]]) -> DiscriminantGroup:
    """Cyclic decomposition of coker(gram : L -> Hom(L, Z)) for symmetric nonsingular gram."""
    n = len(gram)
    if any(len(row) != n for row in gram):
        raise LatticeError("gram matrix must be square")
    if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
        raise LatticeError("gram matrix must be symmetric")
    if det(gram) == 0:
        raise DegenerateLatticeError("gram matrix is singular")
    snf = smith_normal_form(gram)
    u_inv = unimodular_inverse([list(r) for r in snf.U])
    factors, gens = [], []
    for i, d in enumerate(snf.invariant_factors):
        if d > 1:
            factors.append(d)
            gens.append(tuple(u_inv[r][i] for r in range(n)))
    return DiscriminantGroup(tuple(factors), tuple(gens))


def orthogonal_kernel(
    gram: Sequence[Sequence[int]], sublattice: Sequence[Sequence[int]]
) -> list[Vector]:
    """Basis of the saturated kernel {v : v . gram . s = 0 for all s}.

    Returned vectors are primitive (columns of a unimodular matrix), with the
    first nonzero coordinate normalized positive, listed deterministically.
    """
    n = len(gram)
    if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
        raise LatticeError("gram matrix must be symmetric")
    if not sublattice:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rows = [mat_vec(gram, s) for s in sublattice]
    snf = smith_normal_form(rows)
    rank = sum(1 for d in snf.invariant_factors if d != 0)
    out = []
    for j in range(rank, n):
        col = [snf.V[i][j] for i in range(n)]
        lead = next(x for x in col if x != 0)
        if lead < 0:
            col = [-x for x in col]
        out.append(tuple(col))
    return out


# ---------------------------------------------------------------------------
# isotropic pairs and the Mukai-vector pipeline
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MukaiSolution:
    """A canonical isotropic pair and every solution orbit found in the box."""

    a: Vector
    b: Vector
    orbits: tuple[tuple[Vector, Vector], ...]
    mukai_vector: Optional[tuple[int, int, int]] = None


def _form(gram: Sequence[Sequence[int]], x: Sequence[int], y: Sequence[int]) -> int:
    return sum(x[i] * gram[i][j] * y[j] for i in range(len(x)) for j in range(len(x)))


def _canonical_pair(a: Vector, b: Vector) -> tuple[Vector, Vector]:
    """Representative of the orbit under swap and global sign."""
    def norm(p: Vector, q: Vector) -> tuple[Vector, Vector]:
        lead = next((x for x in p if x != 0), 0)
        if lead < 0:
            p = tuple(-x for x in p)
            q = tuple(-x for x in q)
        return (p, q)

    return min(norm(a, b), norm(b, a))


def isotropic_pair_solve(
    gram: Sequence[Sequence[int]], ell: Sequence[int], bound: int = 50
) -> MukaiSolution:
    """Exhaustive search for pairs a, b with a^2 = b^2 = a.ell = b.ell = 0 and a.b = 1.

    The whole coordinate box [-bound, bound]^3 is scanned, solutions are
    grouped into orbits of the symmetry group {swap a and b, global sign},
    and the canonical representative is the lexicographically smallest pair
    after normalizing the first nonzero coordinate of ``a`` positive.
    """
    n = len(gram)
    if n != 3 or any(len(row) != 3 for row in gram):
        raise LatticeError("isotropic_pair_solve expects a rank-3 gram matrix")
    if _form(gram, ell, ell) == 0:
        raise LatticeError("the polarization vector must have nonzero self-pairing")

    iso = _isotropic_orthogonal_vectors(gram, ell, bound)
    pairs = set()
    for ai, a in enumerate(iso):
        for b in iso[ai:]:
            if _form(gram, a, b) == 1:
                pairs.add(_canonical_pair(a, b))
            elif _form(gram, b, a) == 1:  # symmetric form, kept for clarity
                pairs.add(_canonical_pair(b, a))
    if not pairs:
        raise SearchExhaustedError(f"no isotropic pair inside the [-{bound}, {bound}] box")
    orbits = tuple(sorted(pairs))
    a, b = orbits[0]
    return MukaiSolution(a, b, orbits)


def _isotropic_orthogonal_vectors(
    gram: Sequence[Sequence[int]], ell: Sequence[int], bound: int
) -> list[Vector]:
    max_g = max(abs(x) for row in gram for x in row)
    max_l = max(max(abs(x) for x in ell), 1)
    # worst case |v G w| <= 9 * max_g * bound * max(bound, max_l); stay well inside int64
    if 9 * max_g * bound * max(bound, max_l) < 2**60:
        import numpy as np

        rng = np.arange(-bound, bound + 1, dtype=np.int64)
        vs = np.stack(np.meshgrid(rng, rng, rng, indexing="ij"), axis=-1).reshape(-1, 3)
        g = np.asarray(gram, dtype=np.int64)
        gv = vs @ g
        iso = np.einsum("ij,ij->i", gv, vs) == 0
        orth = gv @ np.asarray(ell, dtype=np.int64) == 0
        nonzero = np.any(vs != 0, axis=1)
        sel = vs[iso & orth & nonzero]
        return [tuple(int(x) for x in row) for row in sel]
    out = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            for z in range(-bound, bound + 1):
                v = (x, y, z)
                if v != (0, 0, 0) and _form(gram, v, v) == 0 and _form(gram, v, ell) == 0:
                    out.append(v)
    return out


def _solve_integral(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Vector:
    """Solve sum_j x_j * columns[j] = target; the solution must be integral."""
    n = len(target)
    a = [[Fraction(columns[j][i]) for j in range(len(columns))] + [Fraction(target[i])] for i in range(n)]
    ncols = len(columns)
    row = 0
    pivots = []
    for c in range(ncols):
        piv = next((r for r in range(row, n) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = Fraction(1) / a[row][c]
        a[row] = [x * inv for x in a[row]]
        for r in range(n):
            if r != row and a[r][c] != 0:
                f = a[r][c]
                a[r] = [a[r][k] - f * a[row][k] for k in range(ncols + 1)]
        pivots.append(c)
        row += 1
    for r in range(row, n):
        if a[r][ncols] != 0:
            raise InconsistencyError("vector lies outside the span")
    if len(pivots) != ncols:
        raise InconsistencyError("basis vectors are linearly dependent")
    sol = [a[i][ncols] for i in range(ncols)]
    if any(x.denominator != 1 for x in sol):
        raise InconsistencyError("image is not in the integer span of the basis")
    return tuple(int(x) for x in sol)


def mukai_vector(config, bound: int = 50) -> tuple[int, int, int]:
    """Fourier-Mukai vector of the K3 pair of a rank-3-lattice roof configuration.

    The isotropic pair is solved on both sides, the first side's degree-0
    generator image is carried across the roof with the hyperplane-class
    substitution, expanded in the other side's basis (v, polarization, w),
    and normalized by the residual exchange/sign symmetry so that the first
    two components are positive.
    """
    from . import roofcalc  # local import; roofcalc builds on this module

    lat = roofcalc.middle_lattice(config.side)
    lat_t = roofcalc.middle_lattice(config.tilde_side)
    ell = roofcalc.locus_coordinates(config.side)
    ell_t = roofcalc.locus_coordinates(config.tilde_side)
    sol = isotropic_pair_solve([list(r) for r in lat.gram], ell, bound)
    sol_t = isotropic_pair_solve([list(r) for r in lat_t.gram], ell_t, bound)

    theta_v = roofcalc.class_from_coordinates(lat, sol.a)
    image = roofcalc.switch_side(config, theta_v)
    image_coords = roofcalc.coordinates_in_lattice(lat_t, image)

    cols = [
        [Fraction(x) for x in sol_t.a],
        [Fraction(x) for x in ell_t],
        [Fraction(x) for x in sol_t.b],
    ]
    x, y, z = _solve_integral(cols, [Fraction(c) for c in image_coords])
    candidates = {(x, y, z), (z, y, x), (-x, -y, -z), (-z, -y, -x)}
    chosen = [c for c in candidates if c[0] > 0 and c[1] > 0]
    if len(chosen) != 1:
        raise InconsistencyError(f"sign/exchange normalization is not unique: {sorted(candidates)}")
    return chosen[0]
