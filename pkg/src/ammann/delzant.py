"""Generalized Delzant construction data for golden rhombohedra.

For a tile this computes: the six half-space normals chosen in the unit
star of the quasilattice Q with their exact support offsets, the kernel of
the induced map R^6 -> R^3, the reduction group N (continuous 3-torus part
plus discrete exponent classes), the moment level-set radii, the eight
vertex chart groups, and the volume invariants that separate the oblate
quasifold from the prolate one.

Discrete groups are handled as Z-spans of rational exponent vectors taken
modulo the continuous part and Z^6; two groups are equal exactly when
their Hermite-form bases coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import EmptyInteriorError, MalformedRepError, NotQuasirationalError
from .exactlin import (
    GMat,
    GVec3,
    GVec6,
    det3,
    kernel as mat_kernel,
    solve,
    zspan_canonical,
    zspan_contains,
)
from .golden import GoldenRational, ZERO, ONE
from .quasilattice import star
from .symmetry import signed_star

PAIRING = ((1, 4), (2, 5), (3, 6))


@dataclass(frozen=True)
class HalfSpaceRep:
    """Six (inward unit normal in Q, support offset) pairs describing a tile."""

    normals: tuple  # 6 GVec3, members of the 30-vector star
    offsets: tuple  # 6 GoldenRational
    pairing: tuple = PAIRING

    def pi_matrix(self) -> GMat:
        return GMat.from_columns([list(x) for x in self.normals])


@dataclass(frozen=True, eq=False)
class NDescriptor:
    """Kernel of pi, the embedded 3-torus directions, and the discrete classes.

    gamma_generators are representative exponent classes (reduced lifts of
    the Q generators); gamma_canonical is the Hermite basis of the quotient
    lattice they generate together with Z^6.  Equality compares the
    canonical data, since representatives depend on the facet ordering.
    """

    kernel_basis: tuple  # 3 GVec6 in reduced echelon form
    continuous_basis: tuple  # 3 GVec6 (same span: the embedded torus)
    gamma_generators: tuple  # GVec6 exponent classes, reduced mod kernel and Z^6
    gamma_canonical: tuple  # Hermite basis of the quotient lattice
    gamma_rank: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NDescriptor):
            return NotImplemented
        return (
            self.kernel_basis == other.kernel_basis
            and self.continuous_basis == other.continuous_basis
            and self.gamma_canonical == other.gamma_canonical
            and self.gamma_rank == other.gamma_rank
        )


@dataclass(frozen=True)
class ChartGroup:
    """Discrete group acting on one vertex chart."""

    vertex_mask: int
    facets: tuple  # 3 facet indices, 1-based
    generators: tuple  # GVec6 exponent generators


@dataclass(frozen=True)
class InvariantRecord:
    polytope_volume: GoldenRational
    cover_radii_sq: tuple
    cover_volume: GoldenRational
    gamma_rank: int
    tile_type: str


@dataclass(frozen=True)
class DelzantResult:
    rep: HalfSpaceRep
    ndesc: NDescriptor
    radii_sq: tuple
    chart_groups: tuple
    invariants: InvariantRecord


@dataclass(frozen=True)
class CompareVerdict:
    same_reduction_data: bool
    same_diffeotype: bool
    same_symplectotype: bool


@lru_cache(maxsize=1)
def _pair_normals():
    """For each unsigned star direction pair, the +-normal pair in the 30-star."""
    s = star()
    out = {}
    for i in range(6):
        for j in range(i + 1, 6):
            hits = [q for q in s.q30 if q.dot(s.v[i]).sign() == 0 and q.dot(s.v[j]).sign() == 0]
            if hits:
                out[frozenset((i, j))] = tuple(hits)
    return out


@lru_cache(maxsize=1)
def _signed_dir_index():
    return {v: i for i, v in enumerate(signed_star())}


def halfspace_rep(tile) -> HalfSpaceRep:
    """Exact half-space representation with normals in the 30-vector star.

    Facet m (1..3) is spanned by the two edges other than edge (m mod 3)+1;
    its inward normal is the star vector positive on the omitted edge, and
    the opposite facet carries the negated normal.  Offsets are the support
    minima over the 8 vertices, computed separably over the box.
    """
    e1, e2, e3 = tile.edges
    idx = _signed_dir_index()
    try:
        dirs = [idx[e] % 6 for e in tile.edges]
    except KeyError:
        raise NotQuasirationalError("tile edges are not star vectors") from None
    spans = ((0, 2, 1), (0, 1, 2), (1, 2, 0))  # (span a, span b, omitted) edge slots
    normals = []
    lookup = _pair_normals()
    for a, b, o in spans:
        pair = lookup.get(frozenset((dirs[a], dirs[b])))
        if not pair:
            raise NotQuasirationalError(
                f"no unit star vector is orthogonal to edge directions {dirs[a]},{dirs[b]}"
            )
        n = pair[0]
        s = n.dot(tile.edges[o]).sign()
        if s == 0:
            raise MalformedRepError("normal orthogonal to all three edges")
        if s < 0:
            n = -n
        normals.append(n)
    offsets = []
    for n in normals:
        anchor_dot = n.dot(tile.anchor)
        lo_pos = ZERO
        lo_neg = ZERO
        for e in (e1, e2, e3):
            d = n.dot(e)
            if d.sign() < 0:
                lo_pos = lo_pos + d
            else:
                lo_neg = lo_neg - d
        offsets.append((anchor_dot + lo_pos, -anchor_dot + lo_neg))
    xs = tuple(normals) + tuple(-n for n in normals)
    lams = tuple(o[0] for o in offsets) + tuple(o[1] for o in offsets)
    return HalfSpaceRep(xs, lams)


def reconstruct_polytope(rep: HalfSpaceRep) -> tuple:
    """The 8 vertices back from the half-space data; must equal the tile's."""
    out = []
    for mask in range(8):
        rows = []
        rhs = []
        for m in range(3):
            j = m + 3 if mask >> m & 1 else m
            rows.append(list(rep.normals[j]))
            rhs.append(rep.offsets[j])
        sol = solve(GMat(rows), rhs)
        if sol is None or sol[1]:
            raise MalformedRepError("facet triple does not meet in a single vertex")
        out.append(GVec3(*sol[0]))
    return tuple(out)


def kernel_basis(rep: HalfSpaceRep) -> tuple:
    """Reduced echelon basis of ker(pi); always 3-dimensional for a valid rep."""
    basis = mat_kernel(rep.pi_matrix())
    if len(basis) != 3:
        raise MalformedRepError(f"kernel dimension {len(basis)}, expected 3 (pi not onto)")
    return tuple(GVec6(v) for v in basis)


def _quotient_coords(vec: GVec6) -> tuple:
    """Interleaved rational coordinates (a, b) of the last three components."""
    for c in vec.comps[:3]:
        if c:
            raise AssertionError("exponent class not reduced to the free coordinates")
    out = []
    for c in vec.comps[3:]:
        out.append(c.a)
        out.append(c.b)
    return tuple(out)


_TRIVIAL_QUOTIENT = (
    (Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(0), Fraction(1), Fraction(0)),
)


def _reduce_mod_kernel(vec, kernel) -> GVec6:
    comps = list(vec)
    for row in kernel:
        pivot = next(i for i, c in enumerate(row) if c)
        f = comps[pivot]
        if f:
            comps = [c - f * r for c, r in zip(comps, row)]
    return GVec6(comps)


def _reduce_mod_z6(vec: GVec6) -> GVec6:
    return GVec6([c - c.floor() for c in vec.comps])


def group_n(rep: HalfSpaceRep) -> NDescriptor:
    """The reduction group N = exp{X : pi(X) in Q}.

    The continuous part is ker(pi); the discrete part is generated by exact
    lifts of the six Q generators, reduced modulo the kernel and Z^6 and
    pruned by exact independence tests on the quotient lattice.
    """
    return _group_n_cached(rep.normals)


@lru_cache(maxsize=512)
def _group_n_cached(normals: tuple) -> NDescriptor:
    rep = HalfSpaceRep(normals, (ZERO,) * 6)
    kern = kernel_basis(rep)
    pi = rep.pi_matrix()
    candidates = []
    for u in star().u:
        sol = solve(pi, u)
        if sol is None:
            raise NotQuasirationalError("a Q generator has no lift through pi")
        lift = _reduce_mod_z6(_reduce_mod_kernel(sol[0], kern))
        if not lift.is_zero():
            candidates.append(lift)
    vectors = list(_TRIVIAL_QUOTIENT) + [_quotient_coords(c) for c in candidates]
    # incremental independence: keep a candidate only if it grows the lattice
    kept = []
    span = list(_TRIVIAL_QUOTIENT)
    for cand, coords in zip(candidates, vectors[3:]):
        if not zspan_contains(span, coords):
            kept.append(cand)
            span.append(coords)
    canonical = zspan_canonical(span)
    return NDescriptor(
        kernel_basis=kern,
        continuous_basis=kern,
        gamma_generators=tuple(kept),
        gamma_canonical=canonical,
        gamma_rank=len(canonical) - 3,
    )


def gamma_contains(nd: NDescriptor, vec: GVec6) -> bool:
    """Whether an exponent class lies in the discrete group of nd."""
    reduced = _reduce_mod_z6(_reduce_mod_kernel(vec, nd.kernel_basis))
    return zspan_contains([list(r) for r in nd.gamma_canonical], _quotient_coords(reduced))


def gamma_mutually_generate(a: NDescriptor, b: NDescriptor) -> bool:
    """Each group's generators lie in the other group (exact membership)."""
    return all(gamma_contains(a, g) for g in b.gamma_generators) and all(
        gamma_contains(b, g) for g in a.gamma_generators
    )


def level_radii(rep: HalfSpaceRep) -> tuple:
    """Squared radii of the three level-set 3-spheres: -(lambda_j + lambda_j')."""
    out = []
    for j, jp in rep.pairing:
        r2 = -(rep.offsets[j - 1] + rep.offsets[jp - 1])
        if r2.sign() <= 0:
            raise EmptyInteriorError(f"facet pair {j},{jp} bounds an empty slab")
        out.append(r2)
    return tuple(out)


def chart_groups(rep: HalfSpaceRep) -> tuple:
    """Per-vertex discrete chart groups: N restricted to the facet coordinates."""
    return _chart_groups_cached(rep.normals)


@lru_cache(maxsize=512)
def _chart_groups_cached(normals: tuple):
    nd = _group_n_cached(normals)
    kern = [list(k) for k in nd.kernel_basis]
    # L is generated by Z^6 and the gamma classes, in full 12 rational coords
    l_gens = [GVec6.unit(i) for i in range(6)] + list(nd.gamma_generators)
    out = []
    for mask in range(8):
        facets = tuple((m + 3 if mask >> m & 1 else m) for m in range(3))
        complement = tuple((m if mask >> m & 1 else m + 3) for m in range(3))
        images = []
        for gen in l_gens:
            comps = list(gen)
            for m, c in enumerate(complement):
                f = comps[c]
                if f:
                    comps = [x - f * k for x, k in zip(comps, kern[m])]
            images.append(comps)
        coords = []
        for comps in images:
            row = []
            for j in facets:
                row.append(comps[j].a)
                row.append(comps[j].b)
            for j in complement:
                if comps[j]:
                    raise AssertionError("chart restriction left a nonzero off-chart entry")
            coords.append(tuple(row))
        units = [
            tuple(Fraction(1 if t == 2 * m else 0) for t in range(6)) for m in range(3)
        ]
        canonical = zspan_canonical(coords + units)
        gens = []
        for row in canonical:
            trivial = all(row[2 * m + 1] == 0 for m in range(3)) and all(
                row[2 * m].denominator == 1 for m in range(3)
            )
            if trivial:
                continue
            comps = [ZERO] * 6
            for m, j in enumerate(facets):
                comps[j] = GoldenRational(row[2 * m], row[2 * m + 1])
            gens.append(GVec6(comps))
        out.append(ChartGroup(mask, tuple(f + 1 for f in facets), tuple(gens)))
    return tuple(out)


def invariants(tile) -> InvariantRecord:
    """Volume data distinguishing the two quasifolds.

    The reduced sphere arising from a radius-rho 3-sphere is assigned
    symplectic area rho^2 (the moment-interval length), so the cover volume
    is the product of the three squared radii.
    """
    rep = halfspace_rep(tile)
    radii = level_radii(rep)
    nd = group_n(rep)
    vol = det3(*tile.edges)
    if vol.sign() < 0:
        vol = -vol
    cover = ONE
    for r2 in radii:
        cover = cover * r2
    return InvariantRecord(
        polytope_volume=vol,
        cover_radii_sq=radii,
        cover_volume=cover,
        gamma_rank=nd.gamma_rank,
        tile_type=tile.tile_type,
    )


def delzant_result(tile) -> DelzantResult:
    rep = halfspace_rep(tile)
    nd = group_n(rep)
    radii = level_radii(rep)
    charts = _chart_groups_cached(rep.normals)
    vol = det3(*tile.edges)
    if vol.sign() < 0:
        vol = -vol
    cover = ONE
    for r2 in radii:
        cover = cover * r2
    inv = InvariantRecord(vol, radii, cover, nd.gamma_rank, tile.tile_type)
    return DelzantResult(rep, nd, radii, charts, inv)


def compare(tile_a, tile_b) -> CompareVerdict:
    """Computed verdict on the reduction invariants of two tiles."""
    ra = delzant_result(tile_a)
    rb = delzant_result(tile_b)
    same_n = ra.ndesc.kernel_basis == rb.ndesc.kernel_basis and gamma_mutually_generate(
        ra.ndesc, rb.ndesc
    )
    same_diffeo = (
        same_n
        and ra.ndesc.gamma_rank == rb.ndesc.gamma_rank
        and len(ra.radii_sq) == len(rb.radii_sq)
    )
    same_sympl = (
        ra.invariants.polytope_volume == rb.invariants.polytope_volume
        and sorted(ra.invariants.cover_radii_sq) == sorted(rb.invariants.cover_radii_sq)
        and ra.invariants.cover_volume == rb.invariants.cover_volume
    )
    return CompareVerdict(same_n, same_diffeo, same_sympl)
