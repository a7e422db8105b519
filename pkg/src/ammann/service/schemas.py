"""Pydantic request/response models for the service.

Golden scalars are four integers [a_num, a_den, b_num, b_den]; the wire
format of a patch matches the JSON file format exactly, so the CLI can
round-trip service responses to disk unchanged.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

Golden = list[int]
Vec3 = list[Golden]
Vec6 = list[Golden]


class HalfSpaceModel(BaseModel):
    normal: Vec3
    offset: Golden


class ConfigModel(BaseModel):
    radius: Golden
    shift: list[Golden] = Field(min_length=3, max_length=3)
    window_normals: list[HalfSpaceModel]


class TileModel(BaseModel):
    lattice_origin: list[int] = Field(min_length=6, max_length=6)
    axis_triple: list[int] = Field(min_length=3, max_length=3)
    anchor: Vec3
    edges: list[Vec3] = Field(min_length=3, max_length=3)
    type: Literal["oblate", "prolate"]


class PatchModel(BaseModel):
    config: ConfigModel
    provenance: str
    tiles: list[TileModel]


class GenerateRequest(BaseModel):
    radius: str = Field(description="exact rational, e.g. '8' or '17/2'")
    shift: Optional[list[str]] = Field(default=None, min_length=3, max_length=3)


class ViolationModel(BaseModel):
    check: str
    tiles: list[int]
    detail: str


class VerifyResponse(BaseModel):
    ok: bool
    n_tiles: int
    violations: list[ViolationModel]


class StatsResponse(BaseModel):
    n_oblate: int
    n_prolate: int
    ratio: Optional[float] = None
    ratio_infinite: bool = False


class ObjResponse(BaseModel):
    obj: str


class TileRequest(BaseModel):
    tile: TileModel


class DelzantResponse(BaseModel):
    result: dict
    report: str


class CanonResponse(BaseModel):
    result: dict
    report: str


class CompareRequest(BaseModel):
    a: TileModel
    b: TileModel


class CompareResponse(BaseModel):
    same_reduction_data: bool
    same_diffeotype: bool
    same_symplectotype: bool
    report: str


class GroupResponse(BaseModel):
    order: int
    rotations: int
    star_invariant: bool
    unit_star_invariant: bool


class StarResponse(BaseModel):
    v: list[Vec3]
    u: list[Vec3]
    q30: list[Vec3]


class HealthResponse(BaseModel):
    status: str
    version: str
