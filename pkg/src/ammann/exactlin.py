"""Exact linear algebra over Q(phi) in dimensions 3 and 6.

Gaussian elimination uses exact sign tests for pivoting; underdetermined
systems return a kernel basis in reduced echelon form so results are
deterministic.  A small integer Hermite-form lattice supports Z-span
membership queries for the discrete group computations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .golden import GoldenRational, ZERO, ONE, _coerce


def _g(x) -> GoldenRational:
    g = _coerce(x)
    if g is None:
        raise TypeError(f"expected a golden/rational scalar, got {type(x).__name__}")
    return g


class GVec3:
    """Exact 3-vector over Q(phi)."""

    __slots__ = ("x", "y", "z")

    def __init__(self, x, y, z) -> None:
        self.x = _g(x)
        self.y = _g(y)
        self.z = _g(z)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def __repr__(self) -> str:
        return f"GVec3({self.x}, {self.y}, {self.z})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GVec3):
            return NotImplemented
        return self.x == other.x and self.y == other.y and self.z == other.z

    def __hash__(self) -> int:
        return hash((self.x, self.y, self.z))

    def __add__(self, other: GVec3) -> GVec3:
        return GVec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: GVec3) -> GVec3:
        return GVec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> GVec3:
        return GVec3(-self.x, -self.y, -self.z)

    def scale(self, c) -> GVec3:
        c = _g(c)
        return GVec3(self.x * c, self.y * c, self.z * c)

    def dot(self, other: GVec3) -> GoldenRational:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: GVec3) -> GVec3:
        return GVec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm_sq(self) -> GoldenRational:
        return self.dot(self)

    def is_zero(self) -> bool:
        return not (self.x or self.y or self.z)

    def conj(self) -> GVec3:
        return GVec3(self.x.conj(), self.y.conj(), self.z.conj())

    def embed(self) -> tuple[float, float, float]:
        return (float(self.x), float(self.y), float(self.z))

    def key(self):
        """Total-order sort key (exact lexicographic)."""
        return (self.x, self.y, self.z)


class GVec6:
    """Exact 6-vector over Q(phi)."""

    __slots__ = ("comps",)

    def __init__(self, comps) -> None:
        comps = tuple(_g(c) for c in comps)
        if len(comps) != 6:
            raise ValueError("GVec6 needs exactly 6 components")
        self.comps = comps

    def __iter__(self):
        return iter(self.comps)

    def __getitem__(self, i: int) -> GoldenRational:
        return self.comps[i]

    def __repr__(self) -> str:
        return f"GVec6({list(map(str, self.comps))})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GVec6):
            return NotImplemented
        return self.comps == other.comps

    def __hash__(self) -> int:
        return hash(self.comps)

    def __add__(self, other: GVec6) -> GVec6:
        return GVec6(tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other: GVec6) -> GVec6:
        return GVec6(tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __neg__(self) -> GVec6:
        return GVec6(tuple(-a for a in self.comps))

    def scale(self, c) -> GVec6:
        c = _g(c)
        return GVec6(tuple(a * c for a in self.comps))

    def dot(self, other: GVec6) -> GoldenRational:
        acc = ZERO
        for a, b in zip(self.comps, other.comps):
            acc = acc + a * b
        return acc

    def is_zero(self) -> bool:
        return not any(self.comps)

    @classmethod
    def unit(cls, i: int) -> GVec6:
        return cls(tuple(ONE if j == i else ZERO for j in range(6)))


class GMat:
    """Row-major rectangular matrix over Q(phi)."""

    __slots__ = ("rows",)

    def __init__(self, rows) -> None:
        rows = tuple(tuple(_g(v) for v in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, n: int) -> GMat:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols) -> GMat:
        cols = [list(c) for c in cols]
        return cls(list(zip(*cols)))

    def column(self, j: int) -> list[GoldenRational]:
        return [r[j] for r in self.rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GMat):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "GMat([" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "])"

    def __mul__(self, other: GMat) -> GMat:
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.ncols
        out = []
        for r in self.rows:
            row = []
            for j in range(cols):
                acc = ZERO
                for k, v in enumerate(r):
                    acc = acc + v * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return GMat(out)

    def apply(self, vec):
        """Matrix-vector product; returns GVec3/GVec6 when the length fits."""
        vals = list(vec)
        if len(vals) != self.ncols:
            raise ValueError("dimension mismatch in matrix-vector product")
        out = []
        for r in self.rows:
            acc = ZERO
            for v, w in zip(r, vals):
                acc = acc + v * _g(w)
            out.append(acc)
        if len(out) == 3:
            return GVec3(*out)
        if len(out) == 6:
            return GVec6(out)
        return out

    def transpose(self) -> GMat:
        return GMat(list(zip(*self.rows)))

    def inverse(self) -> GMat:
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = [
            list(r) + [ONE if i == j else ZERO for j in range(n)]
            for i, r in enumerate(self.rows)
        ]
        red, pivots = rref(aug)
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return GMat([row[n:] for row in red])

    def det(self) -> GoldenRational:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 3:
            (a, b, c), (d, e, f), (g, h, i) = self.rows
            return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        # fraction-free enough at desk scale: elimination with exact pivots
        rows = [list(r) for r in self.rows]
        det = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if rows[i][c].sign() != 0), None)
            if p is None:
                return ZERO
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = rows[c][c].inverse()
            for i in range(c + 1, n):
                if rows[i][c].sign() != 0:
                    f = rows[i][c] * inv
                    rows[i] = [v - f * w for v, w in zip(rows[i], rows[c])]
        return det


def dot(u: GVec3, v: GVec3) -> GoldenRational:
    return u.dot(v)


def cross(u: GVec3, v: GVec3) -> GVec3:
    return u.cross(v)


def det3(a: GVec3, b: GVec3, c: GVec3) -> GoldenRational:
    return GMat([list(a), list(b), list(c)]).det()


def rref(rows):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    m, n = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c].sign() != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c].sign() != 0:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def solve(A: GMat, b):
    """Solve A x = b exactly.

    Returns (particular, kernel_basis) with free variables set to zero, or
    None when the system is inconsistent.  kernel_basis is a list of GVec-
    style tuples in reduced echelon form (one vector per free column).
    """
    bvals = list(b)
    if len(bvals) != A.nrows:
        raise ValueError("right-hand side length mismatch")
    aug = [list(r) + [_g(v)] for r, v in zip(A.rows, bvals)]
    red, pivots = rref(aug)
    n = A.ncols
    if n in pivots:
        return None  # pivot in the augmented column: inconsistent
    particular = [ZERO] * n
    for i, c in enumerate(pivots):
        particular[c] = red[i][n]
    kernel = kernel_from_rref([row[:n] for row in red], pivots)
    return particular, kernel


def kernel_from_rref(red, pivots):
    n = len(red[0]) if red else 0
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(tuple(v))
    return basis


def kernel(A: GMat):
    """Exact kernel basis of A, in reduced echelon form."""
    red, pivots = rref([list(r) for r in A.rows])
    return kernel_from_rref(red, pivots)


# ---------------------------------------------------------------------------
# Integer lattices (Hermite form) for Z-span membership over the rationals.
# ---------------------------------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return x, y, g


class IntLattice:
    """Mutable Z-span of integer vectors kept in row echelon form."""

    def __init__(self, dim: int) -> None:
        self.dim = dim
        self.basis: list[list[int]] = []  # sorted by pivot column

    def _pivot(self, row: list[int]) -> int:
        return next((j for j, v in enumerate(row) if v), self.dim)

    def contains(self, vec) -> bool:
        vec = list(vec)
        for row in self.basis:
            j = self._pivot(row)
            if vec[j]:
                q, r = divmod(vec[j], row[j])
                if r:
                    return False
                vec = [a - q * b for a, b in zip(vec, row)]
        return not any(vec)

    def add(self, vec) -> bool:
        """Insert vec; returns True if the lattice grew."""
        vec = list(vec)
        grew = False
        i = 0
        while any(vec):
            j = self._pivot(vec)
            while i < len(self.basis) and self._pivot(self.basis[i]) < j:
                i += 1
            if i == len(self.basis) or self._pivot(self.basis[i]) > j:
                self.basis.insert(i, vec)
                return True
            row = self.basis[i]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [v - q * w for v, w in zip(vec, row)]
            else:
                x, y, g = _xgcd(a, b)
                new_row = [x * u + y * v for u, v in zip(row, vec)]
                vec = [(-(b // g)) * u + (a // g) * v for u, v in zip(row, vec)]
                self.basis[i] = new_row
                grew = True
        return grew

    def hermite_basis(self) -> list[list[int]]:
        """Unique Hermite normal form basis (positive pivots, reduced above)."""
        rows = [r[:] for r in self.basis]
        for i, row in enumerate(rows):
            j = self._pivot(row)
            if row[j] < 0:
                rows[i] = [-v for v in row]
        for i in range(len(rows) - 1, -1, -1):
            j = self._pivot(rows[i])
            p = rows[i][j]
            for k in range(i):
                q = rows[k][j] // p
                if q:
                    rows[k] = [a - q * b for a, b in zip(rows[k], rows[i])]
        return rows


def _common_denominator(vectors) -> int:
    d = 1
    for v in vectors:
        for x in v:
            d = d * x.denominator // gcd(d, x.denominator)
    return d


def zspan_lattice(vectors) -> tuple[IntLattice, int]:
    """Z-span of rational vectors as an integer lattice plus its scale factor."""
    vectors = [list(map(Fraction, v)) for v in vectors]
    if not vectors:
        raise ValueError("empty generating set")
    dim = len(vectors[0])
    scale = _common_denominator(vectors)
    lat = IntLattice(dim)
    for v in vectors:
        lat.add([int(x * scale) for x in v])
    return lat, scale

def zspan_contains(vectors, target) -> bool:
    """Exact membership of a rational vector in the Z-span of rational vectors."""
    target = list(map(Fraction, target))
    lat, scale = zspan_lattice(vectors)
    scaled = []
    for x in target:
        y = x * scale
        if y.denominator != 1:
            return False
        scaled.append(int(y))
    return lat.contains(scaled)


def zspan_canonical(vectors) -> tuple[tuple[Fraction, ...], ...]:
    """Canonical (Hermite) basis of a rational Z-span; equal spans compare equal."""
    lat, scale = zspan_lattice(vectors)
    return tuple(
        tuple(Fraction(v, scale) for v in row) for row in lat.hermite_basis()
    )
