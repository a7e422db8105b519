"""JSON and OBJ serialization.

Golden scalars travel as four integers [a_num, a_den, b_num, b_den] with
positive denominators.  Patch files are loaded leniently on values (the
verifier owns the math checks) but strictly on structure.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .delzant import CompareVerdict, DelzantResult
from .exactlin import GVec3, GVec6
from .golden import GoldenRational
from .quasilattice import star
from .symmetry import CanonicalForm
from .tiling import HalfSpace, Patch, PatchConfig, Rhombohedron, window


def golden_to_json(g: GoldenRational) -> list[int]:
    return g.to_json()


def golden_from_json(data) -> GoldenRational:
    return GoldenRational.from_json(data)


def fraction_to_json(f: Fraction) -> list[int]:
    return GoldenRational(f).to_json()


def fraction_from_json(data) -> Fraction:
    g = GoldenRational.from_json(data)
    if not g.is_rational():
        raise ValueError(f"expected a rational value, got {g}")
    return g.a


def vec3_to_json(v: GVec3) -> list:
    return [golden_to_json(c) for c in v]


def vec3_from_json(data) -> GVec3:
    if len(data) != 3:
        raise ValueError("a 3-vector needs 3 components")
    return GVec3(*(golden_from_json(c) for c in data))


def vec6_to_json(v: GVec6) -> list:
    return [golden_to_json(c) for c in v]


def config_to_dict(cfg: PatchConfig) -> dict:
    return {
        "radius": fraction_to_json(cfg.radius),
        "shift": [fraction_to_json(s) for s in cfg.shift],
        "window_normals": [
            {"normal": vec3_to_json(h.normal), "offset": golden_to_json(h.offset)}
            for h in cfg.window
        ],
    }


def config_from_dict(data) -> PatchConfig:
    radius = fraction_from_json(data["radius"])
    shift = tuple(fraction_from_json(s) for s in data["shift"])
    cfg = PatchConfig(radius=radius, shift=shift)
    given = [
        HalfSpace(vec3_from_json(h["normal"]), golden_from_json(h["offset"]))
        for h in data["window_normals"]
    ]
    if tuple(given) != window():
        raise ValueError("window data does not match the triacontahedron construction")
    return cfg


def tile_to_dict(tile: Rhombohedron) -> dict:
    return {
        "lattice_origin": list(tile.lattice_origin),
        "axis_triple": list(tile.axis_triple),
        "anchor": vec3_to_json(tile.anchor),
        "edges": [vec3_to_json(e) for e in tile.edges],
        "type": tile.tile_type,
    }


def tile_from_dict(data) -> Rhombohedron:
    origin = data["lattice_origin"]
    triple = data["axis_triple"]
    if len(origin) != 6 or not all(isinstance(v, int) for v in origin):
        raise ValueError("lattice_origin must be 6 integers")
    if len(triple) != 3 or not all(isinstance(v, int) and 1 <= v <= 6 for v in triple):
        raise ValueError("axis_triple must be 3 indices in 1..6")
    tile = Rhombohedron(
        vec3_from_json(data["anchor"]),
        tuple(vec3_from_json(e) for e in data["edges"]),
        tuple(origin),
        tuple(triple),
    )
    if data["type"] != tile.tile_type:
        raise ValueError(f"tile tagged {data['type']} but edges give {tile.tile_type}")
    return tile


def patch_to_dict(patch: Patch) -> dict:
    return {
        "config": config_to_dict(patch.config),
        "provenance": patch.provenance,
        "tiles": [tile_to_dict(t) for t in patch.tiles],
    }


def patch_from_dict(data) -> Patch:
    cfg = config_from_dict(data["config"])
    tiles = [tile_from_dict(t) for t in data["tiles"]]
    return Patch(tiles, cfg, data.get("provenance", "unknown"))


def dumps_canonical(obj) -> str:
    """Deterministic JSON text: fixed key order, fixed layout, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=True) + "\n"


def patch_dumps(patch: Patch) -> str:
    return dumps_canonical(patch_to_dict(patch))


def patch_loads(text: str) -> Patch:
    return patch_from_dict(json.loads(text))


def export_obj(patch: Patch) -> str:
    """One mesh object per tile: 8 vertices and 6 quad faces, float coordinates."""
    lines = ["# ammann patch export", f"# tiles: {len(patch.tiles)}"]
    base = 0
    counters = {"oblate": 0, "prolate": 0}
    for tile in patch.tiles:
        n = counters[tile.tile_type]
        counters[tile.tile_type] += 1
        lines.append(f"o {tile.tile_type}_{n:06d}")
        for v in tile.vertices():
            x, y, z = v.embed()
            lines.append(f"v {x!r} {y!r} {z!r}")
        for axis in range(3):
            a, b = [x for x in range(3) if x != axis]
            for side in (0, 1):
                cycle = [0, 1 << a, (1 << a) | (1 << b), 1 << b]
                quad = [base + 1 + (m | (side << axis)) for m in cycle]
                lines.append("f " + " ".join(str(i) for i in quad))
        base += 8
    return "\n".join(lines) + "\n"


def _fmt(g: GoldenRational) -> str:
    return f"{g} ({float(g):.9f})"


def delzant_to_dict(result: DelzantResult) -> dict:
    nd = result.ndesc
    return {
        "rep": {
            "normals": [vec3_to_json(x) for x in result.rep.normals],
            "offsets": [golden_to_json(l) for l in result.rep.offsets],
            "pairing": [list(p) for p in result.rep.pairing],
        },
        "ndescriptor": {
            "kernel_basis": [vec6_to_json(v) for v in nd.kernel_basis],
            "continuous_basis": [vec6_to_json(v) for v in nd.continuous_basis],
            "gamma_generators": [vec6_to_json(v) for v in nd.gamma_generators],
            "gamma_canonical": [
                [[f.numerator, f.denominator] for f in row] for row in nd.gamma_canonical
            ],
            "gamma_rank": nd.gamma_rank,
        },
        "radii_sq": [golden_to_json(r) for r in result.radii_sq],
        "chart_groups": [
            {
                "vertex_mask": c.vertex_mask,
                "facets": list(c.facets),
                "generators": [vec6_to_json(g) for g in c.generators],
            }
            for c in result.chart_groups
        ],
        "invariants": {
            "polytope_volume": golden_to_json(result.invariants.polytope_volume),
            "cover_radii_sq": [golden_to_json(r) for r in result.invariants.cover_radii_sq],
            "cover_volume": golden_to_json(result.invariants.cover_volume),
            "gamma_rank": result.invariants.gamma_rank,
            "type": result.invariants.tile_type,
        },
    }


def render_delzant_report(result: DelzantResult, cross_verdict: CompareVerdict | None = None) -> str:
    s = star()
    lines = [f"tile type: {result.invariants.tile_type}"]
    lines.append("normals X_j (members of the unit star of Q):")
    for j, x in enumerate(result.rep.normals, start=1):
        tag = ""
        for m, u in enumerate(s.u, start=1):
            if x == u:
                tag = f"  = U{m}"
            elif x == -u:
                tag = f"  = -U{m}"
        lines.append(f"  X{j} = ({x.x}, {x.y}, {x.z}){tag}")
    lines.append("offsets lambda_j:")
    for j, l in enumerate(result.rep.offsets, start=1):
        lines.append(f"  lambda_{j} = {_fmt(l)}")
    lines.append("kernel of pi (Lie algebra of N):")
    for v in result.ndesc.kernel_basis:
        lines.append("  (" + ", ".join(str(c) for c in v) + ")")
    lines.append("discrete generators of Gamma (classes mod kernel and Z^6):")
    for v in result.ndesc.gamma_generators:
        lines.append("  (" + ", ".join(str(c) for c in v) + ")")
    lines.append(f"gamma rank: {result.ndesc.gamma_rank}")
    lines.append("level-set sphere radii squared:")
    for r in result.radii_sq:
        lines.append(f"  {_fmt(r)}")
    lines.append(f"polytope volume: {_fmt(result.invariants.polytope_volume)}")
    lines.append(f"cover volume:    {_fmt(result.invariants.cover_volume)}")
    lines.append("chart groups (vertex -> generators):")
    for c in result.chart_groups:
        gens = "; ".join("(" + ", ".join(str(x) for x in g) + ")" for g in c.generators)
        lines.append(f"  facets {c.facets}: {gens}")
    if cross_verdict is not None:
        other = "prolate" if result.invariants.tile_type == "oblate" else "oblate"
        lines.append(
            f"verdict vs canonical {other}: "
            f"diffeomorphic {'yes' if cross_verdict.same_diffeotype else 'no'}, "
            f"symplectomorphic {'yes' if cross_verdict.same_symplectotype else 'no'}"
        )
    return "\n".join(lines) + "\n"


def canon_to_dict(form: CanonicalForm, translation_in_r: bool) -> dict:
    return {
        "matrix": [[golden_to_json(v) for v in row] for row in form.motion.g.mat.rows],
        "det": form.motion.g.det_sign,
        "translation": vec3_to_json(form.motion.t),
        "type": form.tile_type,
        "rotation_sufficed": form.rotation_sufficed,
        "translation_in_r": translation_in_r,
    }


def render_canon_report(form: CanonicalForm, translation_in_r: bool) -> str:
    lines = [f"tile type: {form.tile_type}"]
    lines.append("group element (applied first):")
    for row in form.motion.g.mat.rows:
        lines.append("  [" + ", ".join(str(v) for v in row) + "]")
    lines.append(f"determinant: {form.motion.g.det_sign:+d}")
    t = form.motion.t
    lines.append(f"translation: ({t.x}, {t.y}, {t.z})")
    lines.append(f"translation in R: {'yes' if translation_in_r else 'no'}")
    lines.append(f"rotation suffices: {'yes' if form.rotation_sufficed else 'no'}")
    return "\n".join(lines) + "\n"


def verdict_to_dict(verdict: CompareVerdict) -> dict:
    return {
        "same_reduction_data": verdict.same_reduction_data,
        "same_diffeotype": verdict.same_diffeotype,
        "same_symplectotype": verdict.same_symplectotype,
    }


def render_verdict(verdict: CompareVerdict) -> str:
    return (
        f"same reduction data: {'yes' if verdict.same_reduction_data else 'no'}\n"
        f"diffeomorphic: {'yes' if verdict.same_diffeotype else 'no'}\n"
        f"symplectomorphic: {'yes' if verdict.same_symplectotype else 'no'}\n"
    )
