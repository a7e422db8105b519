import random
from fractions import Fraction

import pytest

from ammann.errors import NonGenericShiftError
from ammann.exactlin import GVec3
from ammann.golden import GoldenRational as G, ONE, ZERO
from ammann.quasilattice import lattice_r, star
from ammann.tiling import (
    DEFAULT_SHIFT,
    Patch,
    PatchConfig,
    Rhombohedron,
    _accept_int,
    _compiled_window,
    accept,
    canonical_oblate,
    canonical_prolate,
    generate_patch,
    interior_facet_audit,
    internal_star,
    phys_projection,
    stats,
    verify_patch,
    window,
)


def small_patch(radius=3):
    return generate_patch(PatchConfig(radius=Fraction(radius)))


def test_internal_star_values():
    istar = internal_star()
    # conj applied componentwise: conj(a + b*phi) = (a+b) - b*phi
    s = star()
    for vi, wi in zip(s.v, istar):
        for c, d in zip(vi, wi):
            assert d == G(c.a + c.b, -c.b)
    assert istar[0] == GVec3(G(0, -1), ONE, ZERO)  # (-phi, 1, 0)
    for w in istar:
        assert w.norm_sq() == G(2, 1)  # conj(3 - phi) = 2 + phi


def test_window_structure():
    w = window()
    assert len(w) == 30
    # 15 antipodal pairs with equal offsets
    normals = {}
    for h in w:
        normals.setdefault(h.normal, h.offset)
    for h in w:
        assert -h.normal in normals
        assert normals[-h.normal] == h.offset
        assert h.offset.sign() > 0  # origin strictly inside


def test_window_supports_projected_cube_vertices():
    istar = internal_star()
    w = window()
    half = G(Fraction(1, 2))
    corners = []
    for mask in range(64):
        v = GVec3(0, 0, 0)
        for i in range(6):
            sign = half if mask >> i & 1 else -half
            v = v + istar[i].scale(sign)
        corners.append(v)
    per_facet_touches = {h: 0 for h in w}
    for v in corners:
        for h in w:
            d = h.normal.dot(v) - h.offset
            assert d.sign() <= 0  # weakly inside every half-space
            if d.sign() == 0:
                per_facet_touches[h] += 1
    # every facet is a rhombus: at least its 4 vertices are projected corners
    assert all(n >= 4 for n in per_facet_touches.values())


def test_accept_origin_and_far_points():
    cfg = PatchConfig(radius=Fraction(1))
    assert accept((0,) * 6, cfg)
    assert not accept((50, 0, 0, 0, 0, 0), cfg)


def test_accept_matches_direct_evaluation():
    # the compiled integer path must agree with plain golden arithmetic
    cfg = PatchConfig(radius=Fraction(1))
    istar = internal_star()
    gamma = cfg.shift_vector()
    w = window()
    rng = random.Random(43)
    for _ in range(200):
        p = tuple(rng.randint(-3, 3) for _ in range(6))
        y = gamma
        for pi, vi in zip(p, istar):
            if pi:
                y = y + vi.scale(pi)
        direct = all((h.normal.dot(y) - h.offset).sign() < 0 for h in w)
        assert accept(p, cfg) == direct


def test_boundary_shift_is_fatal():
    # craft a shift that puts the origin exactly on a window facet
    h = window()[0]
    n = h.normal
    # solve n . gamma = offset for rational gamma: two rational equations
    # (1 and phi parts) in three unknowns; pick gamma = (s, t, 0)
    a1, b1 = n.x.a, n.x.b
    a2, b2 = n.y.a, n.y.b
    det = a1 * b2 - a2 * b1
    assert det != 0
    ha, hb = h.offset.a, h.offset.b
    s = Fraction(ha * b2 - hb * a2, det)
    t = Fraction(a1 * hb - b1 * ha, det)
    gamma = GVec3(G(s), G(t), ZERO)
    assert n.dot(gamma) == h.offset
    with pytest.raises(NonGenericShiftError):
        _accept_int((0,) * 6, _compiled_window((s, t, Fraction(0))))


def test_generate_radius_zero():
    patch = generate_patch(PatchConfig(radius=Fraction(0)))
    for tile in patch.tiles:
        assert tile.lattice_origin == (0,) * 6


def test_generated_patch_properties():
    patch = small_patch(3)
    assert len(patch) > 20
    n_ob, n_pr, ratio = stats(patch)
    assert n_ob > 0 and n_pr > 0
    signed = set(star().v) | {-v for v in star().v}
    for tile in patch.tiles:
        assert all(e in signed for e in tile.edges)
        assert tile.anchor == phys_projection(tile.lattice_origin)
        i, j, k = tile.axis_triple
        assert 1 <= i < j < k <= 6
    # deterministic ordering
    keys = [(t.lattice_origin, t.axis_triple) for t in patch.tiles]
    assert keys == sorted(keys)


def test_generate_deterministic():
    a = small_patch(2)
    b = small_patch(2)
    assert [(t.lattice_origin, t.axis_triple) for t in a.tiles] == [
        (t.lattice_origin, t.axis_triple) for t in b.tiles
    ]


def test_verify_clean_patch():
    patch = small_patch(3)
    report = verify_patch(patch)
    assert report.ok
    assert report.n_tiles == len(patch)


def test_verify_disjoint_canonical_tiles():
    s = star()
    far = lattice_r().combine((3, 0, 0, 0, 0, 0))
    tiles = [
        canonical_oblate(),
        Rhombohedron(far, s.v[0:3], (3, 0, 0, 0, 0, 0), (1, 2, 3)),
    ]
    patch = Patch(tiles, PatchConfig(radius=Fraction(1)), "test")
    assert verify_patch(patch).ok


def test_verify_flags_perturbed_vertex():
    patch = small_patch(2)
    tiles = list(patch.tiles)
    bad = tiles[0]
    shifted = Rhombohedron(
        bad.anchor + GVec3(G(Fraction(1, 2)), ZERO, ZERO),
        bad.edges,
        bad.lattice_origin,
        bad.axis_triple,
    )
    tiles[0] = shifted
    report = verify_patch(Patch(tiles, patch.config, "test"))
    assert not report.ok
    assert any(v.check == "vertex-in-R" and 0 in v.tiles for v in report.violations)


def test_verify_flags_non_face_overlap():
    # same point set built from a mirrored edge triple: 8 shared vertices
    s = star()
    a = canonical_oblate()
    b = Rhombohedron(s.v[5], (s.v[3], s.v[4], -s.v[5]), (9, 9, 9, 9, 9, 9), (4, 5, 6))
    patch = Patch([a, b], PatchConfig(radius=Fraction(1)), "test")
    report = verify_patch(patch)
    assert any(v.check == "face-to-face" for v in report.violations)


def test_interior_facets_shared_by_two():
    patch = small_patch(5)
    n_interior, bad = interior_facet_audit(patch)
    assert n_interior > 0
    assert bad == []


def test_stats_canonical_orbit():
    s = star()
    tiles = []
    for i in range(6):
        for j in range(i + 1, 6):
            for k in range(j + 1, 6):
                tiles.append(
                    Rhombohedron(GVec3(0, 0, 0), (s.v[i], s.v[j], s.v[k]), None, (i + 1, j + 1, k + 1))
                )
    # give them distinct origins so the patch invariant holds
    tiles = [
        Rhombohedron(t.anchor, t.edges, (n, 0, 0, 0, 0, 0), t.axis_triple)
        for n, t in enumerate(tiles)
    ]
    patch = Patch(tiles, PatchConfig(radius=Fraction(0)), "test")
    assert stats(patch) == (10, 10, 1.0)


def test_stats_infinity_marker():
    s = star()
    patch = Patch([canonical_prolate()], PatchConfig(radius=Fraction(0)), "test")
    n_ob, n_pr, ratio = stats(patch)
    assert n_ob == 0 and n_pr == 1
    assert ratio == float("inf")


def test_translation_covariance():
    # shifting gamma by the internal projection of q makes acceptance of p
    # equal to acceptance of p + q with the original shift
    q = (1, 0, -1, 0, 1, 0)
    istar = internal_star()
    delta = GVec3(0, 0, 0)
    for qi, vi in zip(q, istar):
        if qi:
            delta = delta + vi.scale(qi)
    base = tuple(G(s) for s in DEFAULT_SHIFT)
    shifted = tuple(b + d for b, d in zip(base, delta))
    slabs_base = _compiled_window(DEFAULT_SHIFT)
    slabs_shifted = _compiled_window(shifted)
    rng = random.Random(47)
    for _ in range(300):
        p = tuple(rng.randint(-4, 4) for _ in range(6))
        moved = tuple(a + b for a, b in zip(p, q))
        assert _accept_int(p, slabs_shifted) == _accept_int(moved, slabs_base)
    # patch-level spot check: every tile of the shifted patch is the
    # translated tile of the base patch when both anchors are in range
    patch = generate_patch(PatchConfig(radius=Fraction(3)))
    base_keys = {(t.lattice_origin, t.axis_triple) for t in patch.tiles}
    for t in patch.tiles:
        origin = tuple(a - b for a, b in zip(t.lattice_origin, q))
        ok = all(_accept_int(_corner(origin, t.axis_triple, m), slabs_shifted) for m in range(8))
        in_radius = _norm_le(origin, Fraction(3))
        if in_radius:
            assert ok  # the shifted window accepts the translated tile


def _corner(origin, triple, mask):
    q = list(origin)
    for bit, axis in enumerate(triple):
        if mask >> bit & 1:
            q[axis - 1] += 1
    return tuple(q)


def _norm_le(p, radius):
    n2 = phys_projection(p).norm_sq()
    bound = G(3 * radius * radius, -radius * radius)
    return (bound - n2).sign() >= 0


def test_patch_rejects_duplicate_keys():
    t = canonical_oblate()
    with pytest.raises(Exception):
        Patch([t, t], PatchConfig(radius=Fraction(0)), "test")
