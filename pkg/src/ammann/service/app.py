"""FastAPI application wrapping the core package.

Heavy immutable data (the star, the group, canonical reduction results)
is cached at module level, so a long-running server pays for it once.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from fastapi import FastAPI, HTTPException

from .. import __version__, delzant, serialize, tiling
from ..errors import AmmannError
from ..quasilattice import lattice_r, star
from ..symmetry import canonicalize, generate_group, rotation_subgroup, signed_star
from . import schemas


@lru_cache(maxsize=1)
def _group_diagnostics() -> schemas.GroupResponse:
    group = generate_group()
    s = star()
    star_set = set(signed_star())
    q30_set = set(s.q30)
    star_ok = all({g.apply(v) for v in star_set} == star_set for g in group)
    q30_ok = all({g.apply(q) for q in q30_set} == q30_set for g in group)
    return schemas.GroupResponse(
        order=len(group),
        rotations=len(rotation_subgroup()),
        star_invariant=star_ok,
        unit_star_invariant=q30_ok,
    )


def _bad_request(exc: Exception):
    raise HTTPException(status_code=400, detail=str(exc))


def _parse_patch(model: schemas.PatchModel) -> tiling.Patch:
    try:
        return serialize.patch_from_dict(model.model_dump())
    except (ValueError, AmmannError) as exc:
        _bad_request(exc)


def _parse_tile(model: schemas.TileModel) -> tiling.Rhombohedron:
    try:
        return serialize.tile_from_dict(model.model_dump())
    except (ValueError, AmmannError) as exc:
        _bad_request(exc)


def create_app() -> FastAPI:
    app = FastAPI(title="ammann", version=__version__)

    @app.get("/health", response_model=schemas.HealthResponse)
    def health():
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.get("/star", response_model=schemas.StarResponse)
    def star_data():
        s = star()
        return schemas.StarResponse(
            v=[serialize.vec3_to_json(v) for v in s.v],
            u=[serialize.vec3_to_json(u) for u in s.u],
            q30=[serialize.vec3_to_json(q) for q in s.q30],
        )

    @app.get("/group", response_model=schemas.GroupResponse)
    def group_data():
        return _group_diagnostics()

    @app.get("/tiles/canonical/{tile_type}", response_model=schemas.TileModel)
    def canonical_tile(tile_type: str):
        if tile_type == "oblate":
            tile = tiling.canonical_oblate()
        elif tile_type == "prolate":
            tile = tiling.canonical_prolate()
        else:
            raise HTTPException(status_code=404, detail=f"unknown tile type {tile_type!r}")
        return schemas.TileModel(**serialize.tile_to_dict(tile))

    @app.post("/patch/generate", response_model=schemas.PatchModel)
    def patch_generate(req: schemas.GenerateRequest):
        try:
            radius = Fraction(req.radius)
            shift = (
                tuple(Fraction(s) for s in req.shift)
                if req.shift is not None
                else tiling.DEFAULT_SHIFT
            )
            cfg = tiling.PatchConfig(radius=radius, shift=shift)
        except (ValueError, ZeroDivisionError) as exc:
            _bad_request(exc)
        try:
            patch = tiling.generate_patch(cfg)
        except AmmannError as exc:
            _bad_request(exc)
        return schemas.PatchModel(**serialize.patch_to_dict(patch))

    @app.post("/patch/verify", response_model=schemas.VerifyResponse)
    def patch_verify(req: schemas.PatchModel):
        patch = _parse_patch(req)
        report = tiling.verify_patch(patch)
        return schemas.VerifyResponse(
            ok=report.ok,
            n_tiles=report.n_tiles,
            violations=[
                schemas.ViolationModel(check=v.check, tiles=list(v.tiles), detail=v.detail)
                for v in report.violations
            ],
        )

    @app.post("/patch/stats", response_model=schemas.StatsResponse)
    def patch_stats(req: schemas.PatchModel):
        patch = _parse_patch(req)
        n_oblate, n_prolate, ratio = tiling.stats(patch)
        infinite = ratio == float("inf")
        return schemas.StatsResponse(
            n_oblate=n_oblate,
            n_prolate=n_prolate,
            ratio=None if infinite else ratio,
            ratio_infinite=infinite,
        )

    @app.post("/patch/export-obj", response_model=schemas.ObjResponse)
    def patch_export_obj(req: schemas.PatchModel):
        patch = _parse_patch(req)
        return schemas.ObjResponse(obj=serialize.export_obj(patch))

    @app.post("/delzant", response_model=schemas.DelzantResponse)
    def delzant_data(req: schemas.TileRequest):
        tile = _parse_tile(req.tile)
        try:
            result = delzant.delzant_result(tile)
            other = (
                tiling.canonical_prolate()
                if tile.tile_type == "oblate"
                else tiling.canonical_oblate()
            )
            cross = delzant.compare(tile, other)
        except AmmannError as exc:
            _bad_request(exc)
        return schemas.DelzantResponse(
            result=serialize.delzant_to_dict(result),
            report=serialize.render_delzant_report(result, cross),
        )

    @app.post("/canon", response_model=schemas.CanonResponse)
    def canon(req: schemas.TileRequest):
        tile = _parse_tile(req.tile)
        try:
            form = canonicalize(tile)
        except AmmannError as exc:
            _bad_request(exc)
        in_r = lattice_r().member(form.motion.t) is not None
        return schemas.CanonResponse(
            result=serialize.canon_to_dict(form, in_r),
            report=serialize.render_canon_report(form, in_r),
        )

    @app.post("/compare", response_model=schemas.CompareResponse)
    def compare_tiles(req: schemas.CompareRequest):
        a = _parse_tile(req.a)
        b = _parse_tile(req.b)
        try:
            verdict = delzant.compare(a, b)
        except AmmannError as exc:
            _bad_request(exc)
        return schemas.CompareResponse(
            same_reduction_data=verdict.same_reduction_data,
            same_diffeotype=verdict.same_diffeotype,
            same_symplectotype=verdict.same_symplectotype,
            report=serialize.render_verdict(verdict),
        )

    return app


app = create_app()
