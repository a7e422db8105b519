"""The icosahedral star vectors and the quasilattices R and Q.

R is generated by the six icosahedron vectors V1..V6 (norm sigma), Q by
the six icosidodecahedron vectors U1..U6 (norm 1).  Membership is decided
by lifting to the rational (1, phi) coordinates of each Cartesian
component and solving the resulting 6x6 integer-coefficient system.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exactlin import GMat, GVec3, rref
from .golden import GoldenRational, SIGMA_SQ, ONE, PHI, PHI_INV

_H = Fraction(1, 2)


def _v(ax, bx, ay, by, az, bz, scale=1) -> GVec3:
    return GVec3(
        GoldenRational(Fraction(ax) * scale, Fraction(bx) * scale),
        GoldenRational(Fraction(ay) * scale, Fraction(by) * scale),
        GoldenRational(Fraction(az) * scale, Fraction(bz) * scale),
    )


# Icosahedron star: +-V1..V6 are the 12 vertices, |V_i|^2 = 3 - phi.
V = (
    _v(-1, 1, 1, 0, 0, 0),  # (phi-1, 1, 0)
    _v(0, 0, -1, 1, 1, 0),  # (0, phi-1, 1)
    _v(1, 0, 0, 0, -1, 1),  # (1, 0, phi-1)
    _v(1, -1, 1, 0, 0, 0),  # (1-phi, 1, 0)
    _v(0, 0, 1, -1, 1, 0),  # (0, 1-phi, 1)
    _v(1, 0, 0, 0, 1, -1),  # (1, 0, 1-phi)
)

# Minimal generating set of Q: six unit icosidodecahedron vertices.
U = (
    _v(1, 0, -1, 1, 0, 1, _H),  # (1, phi-1, phi)/2
    _v(0, 1, 1, 0, -1, 1, _H),  # (phi, 1, phi-1)/2
    _v(-1, 1, 0, 1, 1, 0, _H),  # (phi-1, phi, 1)/2
    _v(-1, 0, -1, 1, 0, 1, _H),  # (-1, phi-1, phi)/2
    _v(0, 1, -1, 0, -1, 1, _H),  # (phi, -1, phi-1)/2
    _v(-1, 1, 0, 1, -1, 0, _H),  # (phi-1, phi, -1)/2
)


def _icosidodecahedron_star() -> tuple[GVec3, ...]:
    """All 30 unit vectors of Q: coordinate axes plus the cyclic golden triples."""
    vecs = set()
    for s in (1, -1):
        vecs.add(_v(s, 0, 0, 0, 0, 0))
        vecs.add(_v(0, 0, s, 0, 0, 0))
        vecs.add(_v(0, 0, 0, 0, s, 0))
    # cyclic permutations of (+-1, +-(phi-1), +-phi)/2
    base = ((1, 0), (-1, 1), (0, 1))
    for signs in itertools.product((1, -1), repeat=3):
        trip = [(s * a, s * b) for s, (a, b) in zip(signs, base)]
        for r in range(3):
            rot = [trip[(i - r) % 3] for i in range(3)]
            vecs.add(_v(rot[0][0], rot[0][1], rot[1][0], rot[1][1], rot[2][0], rot[2][1], _H))
    out = sorted(vecs, key=GVec3.key)
    if len(out) != 30:
        raise AssertionError(f"icosidodecahedron star has {len(out)} vectors, expected 30")
    return tuple(out)


class StarData:
    """The star constants: V generators, U generators, and the 30-vector Q star."""

    __slots__ = ("v", "u", "q30", "_q30_set")

    def __init__(self) -> None:
        self.v = V
        self.u = U
        self.q30 = _icosidodecahedron_star()
        self._q30_set = frozenset(self.q30)

    def in_q30(self, vec: GVec3) -> bool:
        return vec in self._q30_set

    def q30_index(self, vec: GVec3) -> int:
        return self.q30.index(vec)


@lru_cache(maxsize=1)
def star() -> StarData:
    return StarData()


def _lift6(vec: GVec3) -> list[Fraction]:
    """Rational (1, phi) coordinates per Cartesian component: (ax, bx, ay, by, az, bz)."""
    out = []
    for c in vec:
        out.append(c.a)
        out.append(c.b)
    return out


class Quasilattice:
    """Z-span of six R^3-spanning golden vectors, with exact membership."""

    __slots__ = ("tag", "generators", "lift_matrix", "_inverse")

    def __init__(self, tag: str, generators) -> None:
        self.tag = tag
        self.generators = tuple(generators)
        if len(self.generators) != 6:
            raise ValueError("a quasilattice here always has 6 generators")
        cols = [_lift6(g) for g in self.generators]
        self.lift_matrix = [[cols[j][i] for j in range(6)] for i in range(6)]
        self._inverse = _invert6(self.lift_matrix)

    def __repr__(self) -> str:
        return f"Quasilattice({self.tag})"

    def member(self, vec: GVec3):
        """Integer coefficients of vec on the generators, or None."""
        target = _lift6(vec)
        coeffs = []
        for row in self._inverse:
            acc = Fraction(0)
            for r, t in zip(row, target):
                if r:
                    acc += r * t
            if acc.denominator != 1:
                return None
            coeffs.append(int(acc))
        return tuple(coeffs)

    def __contains__(self, vec: GVec3) -> bool:
        return self.member(vec) is not None

    def combine(self, coeffs) -> GVec3:
        acc = GVec3(0, 0, 0)
        for c, g in zip(coeffs, self.generators):
            if c:
                acc = acc + g.scale(c)
        return acc


def _invert6(m):
    """Exact inverse of a 6x6 rational matrix via golden-field rref."""
    aug = [
        [GoldenRational(v) for v in row]
        + [ONE if i == j else GoldenRational(0) for j in range(6)]
        for i, row in enumerate(m)
    ]
    red, pivots = rref(aug)
    if pivots != list(range(6)):
        raise ValueError("quasilattice generators are not Z-linearly independent")
    inv = []
    for row in red:
        out_row = []
        for v in row[6:]:
            if v.b != 0:
                raise AssertionError("rational matrix inverse left the rationals")
            out_row.append(v.a)
        inv.append(out_row)
    return inv


@lru_cache(maxsize=1)
def lattice_r() -> Quasilattice:
    return Quasilattice("R", V)


@lru_cache(maxsize=1)
def lattice_q() -> Quasilattice:
    return Quasilattice("Q", U)


def _scaled_int_generators(lattice: Quasilattice):
    """Generators as integer (a, b) pairs after clearing denominators."""
    denom = 1
    for g in lattice.generators:
        for c in g:
            for f in (c.a, c.b):
                denom = denom * f.denominator // gcd(denom, f.denominator)
    gens = []
    for g in lattice.generators:
        gens.append(tuple((int(c.a * denom), int(c.b * denom)) for c in g))
    return gens, denom


def norm_search(lattice: Quasilattice, target_norm_sq: GoldenRational, bound: int):
    """All integer combinations in [-bound, bound]^6 with the exact target norm.

    Pure integer arithmetic inside the loop; results are exact GVec3 values
    sorted lexicographically.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    gens, denom = _scaled_int_generators(lattice)
    d2 = denom * denom
    ta = target_norm_sq.a * d2
    tb = target_norm_sq.b * d2
    if ta.denominator != 1 or tb.denominator != 1:
        raise ValueError("target norm must clear the generator denominators")
    target = (int(ta), int(tb))

    hits = []
    rng = range(-bound, bound + 1)

    def descend(i, xa, xb, ya, yb, za, zb):
        if i == 6:
            na = xa * xa + xb * xb + ya * ya + yb * yb + za * za + zb * zb
            nb = xb * (2 * xa + xb) + yb * (2 * ya + yb) + zb * (2 * za + zb)
            if (na, nb) == target:
                hits.append((xa, xb, ya, yb, za, zb))
            return
        (gxa, gxb), (gya, gyb), (gza, gzb) = gens[i]
        for c in rng:
            descend(
                i + 1,
                xa + c * gxa, xb + c * gxb,
                ya + c * gya, yb + c * gyb,
                za + c * gza, zb + c * gzb,
            )

    descend(0, 0, 0, 0, 0, 0, 0)
    out = {
        GVec3(
            GoldenRational(Fraction(xa, denom), Fraction(xb, denom)),
            GoldenRational(Fraction(ya, denom), Fraction(yb, denom)),
            GoldenRational(Fraction(za, denom), Fraction(zb, denom)),
        )
        for (xa, xb, ya, yb, za, zb) in hits
    }
    return sorted(out, key=GVec3.key)


def relation_matrix() -> GMat:
    """M with (U4, U5, U6)^T = M (U1, U2, U3)^T."""
    return GMat([
        [ONE, -PHI, ONE],
        [ONE, ONE, -PHI],
        [-PHI, ONE, ONE],
    ])


def relation_matrix_inverse() -> GMat:
    """M' with (U1, U2, U3)^T = M' (U4, U5, U6)^T; exact inverse of relation_matrix."""
    return GMat([
        [ONE, ONE, PHI_INV],
        [PHI_INV, ONE, ONE],
        [ONE, PHI_INV, ONE],
    ])


def norm_sigma_search(bound: int):
    """Vectors of R with norm sigma, at coefficient bound; expected: the 12 +-V_i."""
    return norm_search(lattice_r(), SIGMA_SQ, bound)


def unit_norm_search(bound: int):
    """Unit vectors of Q at coefficient bound; expected: the 30-vector star."""
    return norm_search(lattice_q(), ONE, bound)
