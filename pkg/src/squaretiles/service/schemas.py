"""Pydantic request/response models for the HTTP API.

Rationals travel as strings in lowest terms ("2", "-1/3"), the same
spelling the text format uses, so responses are exact and stable.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class TileModel(BaseModel):
    x: str
    y: str
    s: str


class TilingModel(BaseModel):
    tiles: list[TileModel]


class TilingResponse(BaseModel):
    tiling: TilingModel
    n: int
    text: str


class ConstructRequest(BaseModel):
    n: int
    variant: str = "subdivide"  # "subdivide" | "quadrant", odd counts only


class ConstructResponse(BaseModel):
    tiling: TilingModel
    n: int
    sigma: str
    minimum: str
    text: str


class TilingRequest(BaseModel):
    tiling: TilingModel


class ViolationModel(BaseModel):
    code: str
    tiles: list[int]
    message: str


class ValidateResponse(BaseModel):
    ok: bool
    violations: list[ViolationModel]


class SigmaResponse(BaseModel):
    sigma: str


class ProfileResponse(BaseModel):
    breakpoints: list[str]
    values: list[int]
    integral: str
    sigma: str
    identity_holds: bool


class SymmetryRequest(BaseModel):
    tiling: TilingModel
    element: str


class IndexedRequest(BaseModel):
    tiling: TilingModel
    index: int


class EnumerateRequest(BaseModel):
    q: int = Field(ge=1, le=7)
    n: int | None = None
    canonical: bool = False
    workers: int = Field(default=1, ge=1, le=16)
    node_budget: int | None = None


class CountRow(BaseModel):
    n: int
    count_raw: int
    count_canonical: int | None
    min_sigma: str
    witnesses: list[str]


class EnumerateResponse(BaseModel):
    q: int
    rows: list[CountRow]
    nodes: int


class VerifyRequest(BaseModel):
    q_max: int = Field(default=5, ge=1, le=6)
    n_max: int | None = None
    k_max: int = Field(default=20, ge=2, le=100)


class CheckReportModel(BaseModel):
    check: str
    corpus: str
    checked: int
    violations: list[str]


class VerifyResponse(BaseModel):
    ok: bool
    reports: list[CheckReportModel]


class RenderRequest(BaseModel):
    tiling: TilingModel
    canvas: int = Field(default=1000, ge=1, le=100_000)
    stroke_width: float = 2.0
    fill: bool = True


class TableRow(BaseModel):
    n: int
    parity: str
    minimum: str
    decimal: str


class TableResponse(BaseModel):
    rows: list[TableRow]


class MinimumResponse(BaseModel):
    n: int
    minimum: str
    decimal: str


class HealthResponse(BaseModel):
    status: str
    version: str


class ErrorBody(BaseModel):
    code: str
    message: str
