"""Cut-and-project generation and exact validation of Ammann tiling patches.

Lattice points of Z^6 are accepted when their Galois-conjugated (internal)
projection falls strictly inside a rhombic triacontahedron window; the
tiles are the 3-faces of Z^6 all of whose corners are accepted.  Every
acceptance decision is an exact sign test; a projection landing exactly on
the window boundary aborts with a non-generic-shift error instead of
falling back to a tie-breaking convention.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import (
    AmmannError,
    InvalidTileError,
    NonGenericShiftError,
    NotCanonicalizableError,
)
from .exactlin import GVec3, cross
from .golden import GoldenRational, ZERO, sign_pair
from .quasilattice import lattice_r, star
from .symmetry import canonicalize, classify_edges, signed_star

DEFAULT_SHIFT = (Fraction(1, 7), Fraction(1, 11), Fraction(1, 13))

# BFS explores this many edge lengths beyond the requested radius so that
# vertex paths may detour outside the ball without disconnecting the patch.
_REGION_SLACK = 4

_TRIPLES = tuple(
    (i, j, k) for i in range(6) for j in range(i + 1, 6) for k in range(j + 1, 6)
)


class Rhombohedron:
    """A tile: anchor vertex plus an ordered triple of star edge vectors."""

    __slots__ = ("anchor", "edges", "lattice_origin", "axis_triple", "tile_type", "_verts")

    def __init__(self, anchor: GVec3, edges, lattice_origin=None, axis_triple=None) -> None:
        self.anchor = anchor
        self.edges = tuple(edges)
        if len(self.edges) != 3:
            raise ValueError("a rhombohedron has exactly 3 edge vectors")
        self.lattice_origin = tuple(lattice_origin) if lattice_origin is not None else None
        self.axis_triple = tuple(axis_triple) if axis_triple is not None else None
        self.tile_type = classify_edges(self.edges)
        self._verts = None

    def __repr__(self) -> str:
        return f"Rhombohedron({self.tile_type}, origin={self.lattice_origin}, axes={self.axis_triple})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Rhombohedron):
            return NotImplemented
        return self.anchor == other.anchor and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.anchor, self.edges))

    def vertices(self) -> tuple[GVec3, ...]:
        """The 8 vertices, indexed by the 3-bit mask of included edges."""
        if self._verts is None:
            out = []
            for mask in range(8):
                v = self.anchor
                for i in range(3):
                    if mask >> i & 1:
                        v = v + self.edges[i]
                out.append(v)
            self._verts = tuple(out)
        return self._verts

    def translated(self, t: GVec3) -> Rhombohedron:
        return Rhombohedron(self.anchor + t, self.edges, self.lattice_origin, self.axis_triple)


def canonical_oblate() -> Rhombohedron:
    s = star()
    return Rhombohedron(GVec3(0, 0, 0), s.v[3:6], (0,) * 6, (4, 5, 6))


def canonical_prolate() -> Rhombohedron:
    s = star()
    return Rhombohedron(GVec3(0, 0, 0), s.v[0:3], (0,) * 6, (1, 2, 3))


def internal_star() -> tuple[GVec3, ...]:
    """Componentwise Galois conjugates of V1..V6; they span the internal space."""
    return tuple(v.conj() for v in star().v)


@dataclass(frozen=True)
class HalfSpace:
    """Strict half-space in internal space: interior means dot(normal, y) < offset."""

    normal: GVec3
    offset: GoldenRational


@lru_cache(maxsize=1)
def window() -> tuple[HalfSpace, ...]:
    """The rhombic triacontahedron: internal projection of the centered unit 6-cube.

    For each generator pair the facet normal is the cross product and the
    offset is the zonotope support value h = (1/2) sum_k |<n, V'_k>|.
    """
    istar = internal_star()
    half = GoldenRational(Fraction(1, 2))
    out = []
    for i in range(6):
        for j in range(i + 1, 6):
            n = cross(istar[i], istar[j])
            if n.is_zero():
                raise AssertionError("degenerate window normal: star data corrupt")
            h = ZERO
            for k in range(6):
                d = n.dot(istar[k])
                if d.sign() < 0:
                    d = -d
                h = h + d
            h = h * half
            out.append(HalfSpace(n, h))
            out.append(HalfSpace(-n, h))
    if len(out) != 30:
        raise AssertionError("window must have 30 facets")
    return tuple(out)


@dataclass(frozen=True)
class PatchConfig:
    """Cut-and-project parameters: radius in units of sigma, rational shift."""

    radius: Fraction
    shift: tuple[Fraction, Fraction, Fraction] = DEFAULT_SHIFT

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        object.__setattr__(self, "shift", tuple(Fraction(s) for s in self.shift))
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")
        if len(self.shift) != 3:
            raise ValueError("shift needs 3 rational coordinates")

    @property
    def window(self) -> tuple[HalfSpace, ...]:
        return window()

    def shift_vector(self) -> GVec3:
        return GVec3(*(GoldenRational(s) for s in self.shift))


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=8)
def _compiled_window(shift: tuple):
    """Integer-pair form of the 15 window slabs, shift folded in.

    Each entry is (W, (ga, gb), (ha, hb)) with W a 6-tuple of integer pairs:
    the point sum(p_i V'_i) + shift is interior iff
    |sum p_i W_i + g| < h in the scaled golden integers.  The shift may have
    golden components (used for covariance checks); configs keep it rational.
    """
    istar = internal_star()
    gamma = GVec3(*(s if isinstance(s, GoldenRational) else GoldenRational(Fraction(s)) for s in shift))
    slabs = []
    for i in range(6):
        for j in range(i + 1, 6):
            n = cross(istar[i], istar[j])
            w = [n.dot(v) for v in istar]
            g = n.dot(gamma)
            h = ZERO
            for d in w:
                h = h + (d if d.sign() >= 0 else -d)
            h = h * GoldenRational(Fraction(1, 2))
            denom = 1
            for val in w + [g, h]:
                denom = _lcm(denom, val.a.denominator)
                denom = _lcm(denom, val.b.denominator)
            wi = tuple((int(v.a * denom), int(v.b * denom)) for v in w)
            slabs.append(
                (
                    wi,
                    (int(g.a * denom), int(g.b * denom)),
                    (int(h.a * denom), int(h.b * denom)),
                )
            )
    return tuple(slabs)


# physical star as integer pairs per coordinate: V[i] -> ((xa,xb),(ya,yb),(za,zb))
@lru_cache(maxsize=1)
def _phys_int_star():
    out = []
    for v in star().v:
        out.append(tuple((int(c.a), int(c.b)) for c in v))
    return tuple(out)


def _accept_int(p, slabs) -> bool:
    for w, (ga, gb), (ha, hb) in slabs:
        ta, tb = ga, gb
        for pi, (wa, wb) in zip(p, w):
            if pi:
                ta += pi * wa
                tb += pi * wb
        hi = sign_pair(ha - ta, hb - tb)
        lo = sign_pair(ta + ha, tb + hb)
        if hi == 0 or lo == 0:
            raise NonGenericShiftError(
                f"lattice point {p} projects exactly onto the window boundary; "
                "choose a different shift"
            )
        if hi < 0 or lo < 0:
            return False
    return True


def accept(p, cfg: PatchConfig) -> bool:
    """Exact cut-and-project acceptance of a Z^6 point."""
    p = tuple(int(c) for c in p)
    if len(p) != 6:
        raise ValueError("lattice point needs 6 integer coordinates")
    return _accept_int(p, _compiled_window(cfg.shift))


def _phys_norm_pair(p):
    """Integer pair (a, b) with |sum p_i V_i|^2 = a + b*phi."""
    xa = xb = ya = yb = za = zb = 0
    for pi, ((vxa, vxb), (vya, vyb), (vza, vzb)) in zip(p, _phys_int_star()):
        if pi:
            xa += pi * vxa
            xb += pi * vxb
            ya += pi * vya
            yb += pi * vyb
            za += pi * vza
            zb += pi * vzb
    na = xa * xa + xb * xb + ya * ya + yb * yb + za * za + zb * zb
    nb = xb * (2 * xa + xb) + yb * (2 * ya + yb) + zb * (2 * za + zb)
    return na, nb


def _within(p, cutoff) -> bool:
    """|phys(p)|^2 <= cutoff, with cutoff = (ca, cb, d): (ca + cb*phi)/d."""
    na, nb = _phys_norm_pair(p)
    ca, cb, d = cutoff
    return sign_pair(ca - na * d, cb - nb * d) >= 0


def _radius_cutoff(radius_sigma: Fraction):
    """(ca, cb, d) for the squared cutoff radius_sigma^2 * (3 - phi)."""
    r2 = radius_sigma * radius_sigma
    d = r2.denominator
    return (3 * r2.numerator, -r2.numerator, d)


def phys_projection(p) -> GVec3:
    """Exact physical projection sum(p_i V_i)."""
    acc = GVec3(0, 0, 0)
    for pi, v in zip(p, star().v):
        if pi:
            acc = acc + v.scale(pi)
    return acc


class Patch:
    """A finite list of tiles with the configuration that produced it."""

    __slots__ = ("tiles", "config", "provenance")

    def __init__(self, tiles, config: PatchConfig, provenance: str) -> None:
        self.tiles = tuple(tiles)
        self.config = config
        self.provenance = provenance
        keys = {(t.lattice_origin, t.axis_triple) for t in self.tiles}
        if len(keys) != len(self.tiles):
            raise AmmannError("duplicate (lattice_origin, axis_triple) in patch")

    def __len__(self) -> int:
        return len(self.tiles)


def _find_seed(accepted) -> tuple:
    zero = (0,) * 6
    if accepted(zero):
        return zero
    for bound in (1, 2, 3):
        rng = range(-bound, bound + 1)
        for p in sorted(_box(rng)):
            if accepted(p):
                return p
    raise AmmannError("no accepted lattice point near the origin; shift is too extreme")


def _box(rng):
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    for e in rng:
                        for f in rng:
                            yield (a, b, c, d, e, f)


def generate_patch(cfg: PatchConfig) -> Patch:
    """Enumerate accepted anchors within the radius and emit complete tiles.

    The accepted vertex set is flooded along the 12 lattice edge moves
    within a slightly larger ball; a tile is emitted for an anchor p and
    axis triple i<j<k when all 8 corners of the lattice cube face are
    accepted.  Output order is lexicographic in (lattice_origin, triple),
    so identical configs produce identical patches.
    """
    from . import __version__

    slabs = _compiled_window(cfg.shift)
    cache: dict = {}

    def accepted(p) -> bool:
        r = cache.get(p)
        if r is None:
            r = _accept_int(p, slabs)
            cache[p] = r
        return r

    region = _radius_cutoff(cfg.radius + _REGION_SLACK)
    cutoff = _radius_cutoff(cfg.radius)

    seed = _find_seed(accepted)
    visited = {seed}
    queue = deque([seed])
    accepted_points = [seed] if _within(seed, region) else []
    while queue:
        p = queue.popleft()
        for i in range(6):
            for s in (1, -1):
                q = list(p)
                q[i] += s
                q = tuple(q)
                if q in visited:
                    continue
                visited.add(q)
                if not _within(q, region):
                    continue
                if accepted(q):
                    accepted_points.append(q)
                    queue.append(q)

    anchors = sorted(p for p in accepted_points if _within(p, cutoff))

    s = star()
    tiles = []
    for p in anchors:
        for (i, j, k) in _TRIPLES:
            ok = True
            for mask in range(1, 8):
                q = list(p)
                if mask & 1:
                    q[i] += 1
                if mask & 2:
                    q[j] += 1
                if mask & 4:
                    q[k] += 1
                if not accepted(tuple(q)):
                    ok = False
                    break
            if ok:
                tiles.append(
                    Rhombohedron(
                        phys_projection(p),
                        (s.v[i], s.v[j], s.v[k]),
                        p,
                        (i + 1, j + 1, k + 1),
                    )
                )
    return Patch(tiles, cfg, f"ammann-{__version__}")


@dataclass(frozen=True)
class Violation:
    check: str
    tiles: tuple
    detail: str


class PatchReport:
    """Validation outcome; ok means zero violations."""

    __slots__ = ("violations", "n_tiles")

    def __init__(self, violations, n_tiles: int) -> None:
        self.violations = tuple(violations)
        self.n_tiles = n_tiles

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_patch(patch: Patch) -> PatchReport:
    """Exact audit: vertices in R, edges in the star, tiles canonicalizable
    with translation in R, and shared vertex sets forming full faces."""
    violations = []
    lattice = lattice_r()
    star_set = set(signed_star())

    member_cache: dict = {}

    def in_r(v: GVec3) -> bool:
        r = member_cache.get(v)
        if r is None:
            r = lattice.member(v) is not None
            member_cache[v] = r
        return r

    # (a) vertices in R, (b) edges in the star
    for idx, tile in enumerate(patch.tiles):
        for v in tile.vertices():
            if not in_r(v):
                violations.append(Violation("vertex-in-R", (idx,), f"vertex {v!r} not in R"))
        for e in tile.edges:
            if e not in star_set:
                violations.append(Violation("edge-in-star", (idx,), f"edge {e!r} not a star vector"))

    # (c) canonicalizable with translation in R
    for idx, tile in enumerate(patch.tiles):
        try:
            form = canonicalize(tile)
        except (InvalidTileError, NotCanonicalizableError) as exc:
            violations.append(Violation("canonicalize", (idx,), str(exc)))
            continue
        if not in_r(form.motion.t):
            violations.append(
                Violation("canonicalize", (idx,), "canonicalizing translation not in R")
            )

    # (d) face-to-face: any shared vertex set is a vertex, an edge, or a facet
    vertex_tiles: dict = {}
    for idx, tile in enumerate(patch.tiles):
        for v in tile.vertices():
            vertex_tiles.setdefault(v, []).append(idx)
    pairs = set()
    for tids in vertex_tiles.values():
        for a in range(len(tids)):
            for b in range(a + 1, len(tids)):
                pairs.add((tids[a], tids[b]))
    vert_sets = [frozenset(t.vertices()) for t in patch.tiles]
    for a, b in sorted(pairs):
        shared = vert_sets[a] & vert_sets[b]
        if not _is_full_face(shared, patch.tiles[a], patch.tiles[b]):
            violations.append(
                Violation("face-to-face", (a, b), f"shared vertex set of size {len(shared)} is not a face")
            )
    return PatchReport(violations, len(patch.tiles))


def _is_full_face(shared, tile_a: Rhombohedron, tile_b: Rhombohedron) -> bool:
    n = len(shared)
    if n == 1:
        return True
    if n == 2:
        u, w = sorted(shared, key=GVec3.key)
        d = w - u
        return _is_edge_of(d, tile_a) and _is_edge_of(d, tile_b)
    if n == 4:
        vs = sorted(shared, key=GVec3.key)
        m = vs[0]
        diffs = [v - m for v in vs[1:]]
        for i in range(3):
            a, b = diffs[(i + 1) % 3], diffs[(i + 2) % 3]
            if diffs[i] == a + b:
                return (
                    _is_edge_of(a, tile_a)
                    and _is_edge_of(b, tile_a)
                    and _is_edge_of(a, tile_b)
                    and _is_edge_of(b, tile_b)
                )
        return False
    return False


def _is_edge_of(d: GVec3, tile: Rhombohedron) -> bool:
    return d in tile.edges or -d in tile.edges


def interior_facet_audit(patch: Patch, margin: Fraction = Fraction(5, 2)):
    """Count tiles per facet; interior facets must be shared by exactly 2.

    A facet is interior when all 4 vertices lie within radius - margin (in
    sigma units); the default margin exceeds the largest tile diameter, so
    both incident tiles of an interior facet have anchors inside the patch.
    """
    inner = patch.config.radius - margin
    if inner <= 0:
        return 0, []
    cutoff = _radius_cutoff(inner)

    def inside(v: GVec3) -> bool:
        n2 = v.norm_sq()
        ca, cb, d = cutoff
        return sign_pair(ca - n2.a * d, cb - n2.b * d) >= 0

    facet_count: dict = {}
    for tile in patch.tiles:
        verts = tile.vertices()
        for axis in range(3):
            for side in (0, 1):
                masks = [m for m in range(8) if (m >> axis & 1) == side]
                key = frozenset(verts[m] for m in masks)
                facet_count[key] = facet_count.get(key, 0) + 1
    n_interior = 0
    bad = []
    for key, count in facet_count.items():
        if all(inside(v) for v in key):
            n_interior += 1
            if count != 2:
                bad.append((sorted(key, key=GVec3.key)[0], count))
    return n_interior, bad


def stats(patch: Patch):
    """(n_oblate, n_prolate, prolate/oblate ratio as float, inf if no oblates)."""
    n_oblate = sum(1 for t in patch.tiles if t.tile_type == "oblate")
    n_prolate = len(patch.tiles) - n_oblate
    ratio = float("inf") if n_oblate == 0 else n_prolate / n_oblate
    return n_oblate, n_prolate, ratio
