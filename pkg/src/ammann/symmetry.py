"""The icosahedral group as exact golden-rational matrices.

The group is generated by Gram-preserving frame extension: images of
(V1, V2, V3) are searched among signed star vectors with matching inner
products, the matrix is solved for exactly, and candidates that fail to
permute the star are discarded.  The result is the full group of order
120 (60 rotations), self-verified rather than transcribed.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvalidTileError, NotCanonicalizableError
from .exactlin import GMat, GVec3, det3
from .golden import GoldenRational
from .quasilattice import star

DET_PROLATE = GoldenRational(-2, 2)  # 2/phi
DET_OBLATE = GoldenRational(4, -2)  # 2/phi^2

# canonical tiles: prolate edges V1,V2,V3; oblate edges V4,V5,V6 (0-based dirs)
_CANONICAL_DIRS = {"prolate": frozenset((0, 1, 2)), "oblate": frozenset((3, 4, 5))}


class Isometry:
    """Orthogonal matrix over Q(phi) permuting the signed icosahedron star."""

    __slots__ = ("mat", "perm", "det_sign", "_key")

    def __init__(self, mat: GMat, perm: tuple[int, ...]) -> None:
        self.mat = mat
        self.perm = perm
        self.det_sign = mat.det().sign()
        self._key = tuple(v for row in mat.rows for v in row)

    def __repr__(self) -> str:
        return f"Isometry(det={self.det_sign:+d}, perm={self.perm})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.mat == other.mat

    def __hash__(self) -> int:
        return hash(self.mat)

    def apply(self, vec: GVec3) -> GVec3:
        return self.mat.apply(vec)

    def compose(self, other: Isometry) -> Isometry:
        """self after other."""
        return Isometry(self.mat * other.mat, tuple(self.perm[p] for p in other.perm))

    def inverse(self) -> Isometry:
        inv_perm = [0] * 12
        for i, p in enumerate(self.perm):
            inv_perm[p] = i
        return Isometry(self.mat.transpose(), tuple(inv_perm))

    def is_rotation(self) -> bool:
        return self.det_sign > 0

    def key(self):
        return self._key


@lru_cache(maxsize=1)
def signed_star() -> tuple[GVec3, ...]:
    """V1..V6 followed by their negatives; index i+6 is the negation of i."""
    s = star()
    return s.v + tuple(-v for v in s.v)


@lru_cache(maxsize=1)
def _signed_index() -> dict:
    return {v: i for i, v in enumerate(signed_star())}


def _perm_of(mat: GMat):
    """Permutation induced on the signed star, or None if not star-preserving."""
    idx = _signed_index()
    perm = [0] * 12
    for i in range(6):
        img = mat.apply(signed_star()[i])
        j = idx.get(img)
        if j is None:
            return None
        perm[i] = j
        perm[i + 6] = (j + 6) % 12
    return tuple(perm)


@lru_cache(maxsize=1)
def generate_group() -> tuple[Isometry, ...]:
    """All orthogonal golden matrices preserving the star; order 120."""
    s = star()
    v1, v2, v3 = s.v[0], s.v[1], s.v[2]
    d12, d13, d23 = v1.dot(v2), v1.dot(v3), v2.dot(v3)
    frame_inv = GMat.from_columns([v1, v2, v3]).inverse()
    identity = GMat.identity(3)

    found = {}
    vecs = signed_star()
    for a in vecs:
        for b in vecs:
            if a.dot(b) != d12:
                continue
            for c in vecs:
                if a.dot(c) != d13 or b.dot(c) != d23:
                    continue
                mat = GMat.from_columns([a, b, c]) * frame_inv
                if mat.transpose() * mat != identity:
                    continue
                perm = _perm_of(mat)
                if perm is None:
                    continue
                found.setdefault(mat.rows, Isometry(mat, perm))
    if not found:
        raise AssertionError("icosahedral group generation found nothing: star data corrupt")
    group = sorted(found.values(), key=Isometry.key)
    return tuple(group)


def rotation_subgroup() -> tuple[Isometry, ...]:
    return tuple(g for g in generate_group() if g.is_rotation())


class RigidMotion:
    """x maps to g(x) + t."""

    __slots__ = ("g", "t")

    def __init__(self, g: Isometry, t: GVec3) -> None:
        self.g = g
        self.t = t

    def apply(self, vec: GVec3) -> GVec3:
        return self.g.apply(vec) + self.t

    def __repr__(self) -> str:
        return f"RigidMotion(g={self.g!r}, t={self.t!r})"


class CanonicalForm:
    """Result of canonicalize: the motion, the tile type, and diagnostics."""

    __slots__ = ("motion", "tile_type", "rotation_sufficed")

    def __init__(self, motion: RigidMotion, tile_type: str, rotation_sufficed: bool) -> None:
        self.motion = motion
        self.tile_type = tile_type
        self.rotation_sufficed = rotation_sufficed


def classify_edges(edges) -> str:
    """'oblate' or 'prolate' from the exact determinant of the edge triple."""
    d = det3(*edges)
    if d.sign() < 0:
        d = -d
    if d == DET_PROLATE:
        return "prolate"
    if d == DET_OBLATE:
        return "oblate"
    raise InvalidTileError(f"edge determinant {d} is not a golden rhombohedron volume")


@lru_cache(maxsize=32)
def _transport_candidates(src_dirs: frozenset, dst_dirs: frozenset) -> tuple[Isometry, ...]:
    out = []
    for g in generate_group():
        if frozenset(g.perm[i] % 6 for i in src_dirs) == dst_dirs:
            out.append(g)
    return tuple(out)


def canonicalize(tile) -> CanonicalForm:
    """Rigid motion (group element + translation) mapping the tile onto the
    canonical tile of its type, anchored at the origin.

    Ties among group elements are broken by lexicographic minimality of the
    matrix entries, so the result is deterministic.
    """
    tile_type = classify_edges(tile.edges)
    idx = _signed_index()
    try:
        signed_idx = [idx[e] for e in tile.edges]
    except KeyError:
        raise NotCanonicalizableError("tile edges are not signed star vectors") from None
    src = frozenset(i % 6 for i in signed_idx)
    if len(src) != 3:
        raise NotCanonicalizableError("tile edges repeat a star direction")
    candidates = _transport_candidates(src, _CANONICAL_DIRS[tile_type])
    if not candidates:
        raise NotCanonicalizableError(
            f"no icosahedral element maps directions {sorted(src)} to the canonical triple"
        )
    # minimal under the reversed entry order, which makes the identity win
    # whenever it qualifies (the canonical tiles map by (identity, 0))
    g = max(candidates, key=Isometry.key)
    vecs = signed_star()
    new_anchor = g.apply(tile.anchor)
    for i in signed_idx:
        j = g.perm[i]
        if j >= 6:  # edge maps to a negative star vector: re-anchor across it
            new_anchor = new_anchor + vecs[j]
    t = -new_anchor
    rotation_sufficed = any(c.is_rotation() for c in candidates)
    return CanonicalForm(RigidMotion(g, t), tile_type, rotation_sufficed)


def orbit_classes() -> tuple[int, int]:
    """Counts of (oblate, prolate) classes among the 20 positive edge triples."""
    s = star()
    n_oblate = n_prolate = 0
    for i in range(6):
        for j in range(i + 1, 6):
            for k in range(j + 1, 6):
                kind = classify_edges((s.v[i], s.v[j], s.v[k]))
                if kind == "oblate":
                    n_oblate += 1
                else:
                    n_prolate += 1
    return n_oblate, n_prolate
