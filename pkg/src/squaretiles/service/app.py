"""FastAPI service wrapping the core package.

Every library operation is exposed as one endpoint; domain errors map
onto stable error codes in a JSON body. The service holds no state:
each request carries its tiling, and responses are exact (rationals as
strings in lowest terms).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .. import __version__
from ..checks import construction_corpus, enumerated_corpus, run_suite
from ..constructions import (
    build_even,
    build_odd_quadrant,
    build_odd_subdivide,
    exchange_to_corner,
    min_length_table,
    min_total_length,
    subdivide_tile,
)
from ..enumeration import survey_grid
from ..errors import (
    BadParameterError,
    InvalidTilingError,
    MalformedProfileError,
    PreconditionUnmetError,
    ResourceLimitError,
    SquareTilesError,
    TilingParseError,
    UnsupportedCountError,
)
from ..geometry import Tile, Tiling, total_length, validate
from ..profiles import integrate, vertical_profile
from ..render import RenderSpec, decimal_string, render_svg
from ..symmetry import apply_symmetry, canonical_form
from ..textformat import parse_rational, serialize
from . import schemas

_ERROR_STATUS = (
    (TilingParseError, "parse-error", 422),
    (InvalidTilingError, "invalid-tiling", 422),
    (UnsupportedCountError, "unsupported-count", 422),
    (PreconditionUnmetError, "precondition-unmet", 409),
    (ResourceLimitError, "resource-limit", 503),
    (MalformedProfileError, "malformed-profile", 422),
    (BadParameterError, "bad-parameter", 422),
)


def _to_tiling(model: schemas.TilingModel) -> Tiling:
    tiles = []
    for tm in model.tiles:
        x = parse_rational(tm.x)
        y = parse_rational(tm.y)
        s = parse_rational(tm.s)
        tiles.append(Tile(x, y, s))
    return Tiling(tiles)


def _to_model(t: Tiling) -> schemas.TilingModel:
    return schemas.TilingModel(
        tiles=[
            schemas.TileModel(x=str(tl.x), y=str(tl.y), s=str(tl.s))
            for tl in t.sorted_tiles()
        ]
    )


def _tiling_response(t: Tiling) -> schemas.TilingResponse:
    return schemas.TilingResponse(tiling=_to_model(t), n=t.n, text=serialize(t))


def create_app() -> FastAPI:
    app = FastAPI(title="squaretiles", version=__version__)

    @app.exception_handler(SquareTilesError)
    async def domain_error(request: Request, exc: SquareTilesError):
        for cls, code, status in _ERROR_STATUS:
            if isinstance(exc, cls):
                return JSONResponse(
                    status_code=status, content={"code": code, "message": str(exc)}
                )
        return JSONResponse(
            status_code=500, content={"code": "internal", "message": str(exc)}
        )

    @app.get("/health", response_model=schemas.HealthResponse)
    def health():
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.get("/minimum/{n}", response_model=schemas.MinimumResponse)
    def minimum(n: int):
        value = min_total_length(n)
        return schemas.MinimumResponse(
            n=n, minimum=str(value), decimal=decimal_string(value)
        )

    @app.get("/table", response_model=schemas.TableResponse)
    def table(k_max: int = 10):
        rows = [
            schemas.TableRow(
                n=n, parity=parity, minimum=str(v), decimal=decimal_string(v)
            )
            for n, parity, v in min_length_table(k_max)
        ]
        return schemas.TableResponse(rows=rows)

    @app.post("/construct", response_model=schemas.ConstructResponse)
    def construct(req: schemas.ConstructRequest):
        minimum = min_total_length(req.n)
        if req.n % 2 == 0:
            t = build_even(req.n // 2)
        elif req.variant == "quadrant":
            t = build_odd_quadrant((req.n - 3) // 2)
        elif req.variant == "subdivide":
            t = build_odd_subdivide((req.n - 3) // 2)
        else:
            raise BadParameterError(f"unknown variant {req.variant!r}")
        sigma = total_length(t)
        return schemas.ConstructResponse(
            tiling=_to_model(t),
            n=t.n,
            sigma=str(sigma),
            minimum=str(minimum),
            text=serialize(t),
        )

    @app.post("/validate", response_model=schemas.ValidateResponse)
    def validate_tiling(req: schemas.TilingRequest):
        report = validate(_to_tiling(req.tiling))
        return schemas.ValidateResponse(
            ok=report.ok,
            violations=[
                schemas.ViolationModel(code=v.code, tiles=list(v.tiles), message=v.message)
                for v in report.violations
            ],
        )

    @app.post("/sigma", response_model=schemas.SigmaResponse)
    def sigma(req: schemas.TilingRequest):
        return schemas.SigmaResponse(sigma=str(total_length(_to_tiling(req.tiling))))

    @app.post("/profile", response_model=schemas.ProfileResponse)
    def profile(req: schemas.TilingRequest):
        t = _to_tiling(req.tiling)
        p = vertical_profile(t)
        total = integrate(p)
        sig = total_length(t)
        return schemas.ProfileResponse(
            breakpoints=[str(b) for b in p.breakpoints],
            values=list(p.values),
            integral=str(total),
            sigma=str(sig),
            identity_holds=total == sig,
        )

    @app.post("/symmetry", response_model=schemas.TilingResponse)
    def symmetry(req: schemas.SymmetryRequest):
        return _tiling_response(apply_symmetry(_to_tiling(req.tiling), req.element))

    @app.post("/canonical", response_model=schemas.TilingResponse)
    def canonical(req: schemas.TilingRequest):
        return _tiling_response(canonical_form(_to_tiling(req.tiling)))

    @app.post("/subdivide", response_model=schemas.TilingResponse)
    def subdivide(req: schemas.IndexedRequest):
        return _tiling_response(subdivide_tile(_to_tiling(req.tiling), req.index))

    @app.post("/exchange", response_model=schemas.TilingResponse)
    def exchange(req: schemas.IndexedRequest):
        return _tiling_response(exchange_to_corner(_to_tiling(req.tiling), req.index))

    @app.post("/enumerate", response_model=schemas.EnumerateResponse)
    def enumerate_grid(req: schemas.EnumerateRequest):
        report = survey_grid(
            req.q,
            witness_ns=[req.n] if req.n is not None else None,
            canonical=req.canonical,
            node_budget=req.node_budget,
            workers=req.workers,
        )
        rows = []
        for n in sorted(report.per_n):
            if req.n is not None and n != req.n:
                continue
            stats = report.per_n[n]
            rows.append(
                schemas.CountRow(
                    n=n,
                    count_raw=stats.count_raw,
                    count_canonical=stats.count_canonical,
                    min_sigma=str(stats.min_sigma),
                    witnesses=[serialize(w) for w in stats.witnesses],
                )
            )
        return schemas.EnumerateResponse(q=report.q, rows=rows, nodes=report.nodes)

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest):
        reports = run_suite(
            construction_corpus(req.k_max), f"constructions k<={req.k_max}"
        )
        reports += run_suite(
            enumerated_corpus(req.q_max, req.n_max), f"grid tilings q<={req.q_max}"
        )
        return schemas.VerifyResponse(
            ok=all(r.ok for r in reports),
            reports=[
                schemas.CheckReportModel(
                    check=r.check,
                    corpus=r.corpus,
                    checked=r.checked,
                    violations=[v.details for v in r.violations],
                )
                for r in reports
            ],
        )

    @app.post("/render")
    def render(req: schemas.RenderRequest):
        svg = render_svg(
            _to_tiling(req.tiling),
            RenderSpec(canvas=req.canvas, stroke_width=req.stroke_width, fill=req.fill),
        )
        return Response(content=svg, media_type="image/svg+xml")

    return app


app = create_app()
