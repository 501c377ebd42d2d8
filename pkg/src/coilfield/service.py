"""Stateless JSON-over-HTTP wrapper of the engine for the browser UI.

Bodies mirror the persistence document schemas.  Every error body has the
shape {"code", "message", "field_path"} with code one of validation,
numeric, not_found, over_capacity.  Simulation is synchronous behind a
hard grid-size cap; there is no server-side session state.
"""

from __future__ import annotations

from contextlib import asynccontextmanager
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import __version__
from .coils import preset_catalog
from .electrical import OverCapacityError, electrical_report
from .field import simulate_grid
from .homogeneity import (
    ZeroReferenceError,
    homogeneity_map,
    homogeneous_mask,
    largest_inscribed_square,
    mask_to_rle,
    square_volume_report,
)
from .persistence import (
    DocumentValidationError,
    ParseError,
    ResultsDocument,
    UnsupportedVersionError,
    parse_project_payload,
    parse_field_table,
    square_payload,
    volume_payload,
    results_payload,
)

# Synchronous simulation guard: at most this many lattice points per request.
MAX_SYNC_POINTS = 251 * 251


def _error(status: int, code: str, message: str, field_path=None) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"code": code, "message": message, "field_path": field_path},
    )


def create_app(frontend_dir: str | None = None) -> FastAPI:
    state = {"ready": False}

    @asynccontextmanager
    async def lifespan(_app: FastAPI):
        state["ready"] = True
        yield
        state["ready"] = False

    app = FastAPI(title="coilfield", version=__version__, lifespan=lifespan)

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, exc: StarletteHTTPException):
        code = "not_found" if exc.status_code == 404 else "validation"
        return _error(exc.status_code, code, str(exc.detail))

    @app.exception_handler(RequestValidationError)
    async def _body_error(request: Request, exc: RequestValidationError):
        return _error(400, "validation", str(exc))

    @app.get("/api/v1/health")
    def health():
        if not state["ready"]:
            return _error(503, "validation", "service is starting")
        return {"status": "ok", "version": __version__}

    @app.get("/api/v1/presets")
    def presets():
        return {"presets": preset_catalog()}

    @app.post("/api/v1/simulate")
    def simulate(body: dict):
        try:
            doc = parse_project_payload(body)
        except UnsupportedVersionError as exc:
            return _error(400, "validation", str(exc), exc.path)
        except DocumentValidationError as exc:
            first = exc.issues[0]
            return _error(400, "validation", first.message, first.path)
        except ParseError as exc:
            return _error(400, "validation", str(exc), exc.path)
        if doc.region.ny * doc.region.nz > MAX_SYNC_POINTS:
            return _error(
                413,
                "over_capacity",
                f"grid of {doc.region.ny}x{doc.region.nz} points exceeds the synchronous "
                f"cap of {MAX_SYNC_POINTS} points",
                "region",
            )
        grid = simulate_grid(doc.system, doc.region)
        try:
            electrical = electrical_report(doc.system)
        except OverCapacityError as exc:
            return _error(413, "over_capacity", str(exc))
        results = ResultsDocument(project=doc, grid=grid, electrical=electrical)
        return results_payload(results)

    @app.post("/api/v1/homogeneity")
    def homogeneity(body: dict):
        if not isinstance(body, dict):
            return _error(400, "validation", "expected a JSON object body")
        unknown = set(body) - {"results", "threshold_percent"}
        if unknown:
            return _error(400, "validation", f"unknown field(s): {', '.join(sorted(unknown))}")
        if "results" not in body or "threshold_percent" not in body:
            return _error(400, "validation", "body needs 'results' and 'threshold_percent'")
        threshold = body["threshold_percent"]
        if (
            isinstance(threshold, bool)
            or not isinstance(threshold, (int, float))
            or not 0.0 < threshold <= 100.0
        ):
            return _error(400, "validation", "threshold_percent must be in (0, 100]", "threshold_percent")
        try:
            results = body["results"]
            if not isinstance(results, dict):
                raise ParseError("expected the results document as an object", "results")
            doc = parse_project_payload(
                {k: v for k, v in results.items() if k not in ("electrical", "homogeneity_summary", "field_table")}
            )
            if not isinstance(results.get("field_table"), str):
                raise ParseError("missing or invalid field_table", "results.field_table")
            grid = parse_field_table(results["field_table"], doc.region)
        except (ParseError, DocumentValidationError, UnsupportedVersionError) as exc:
            path = getattr(exc, "path", None)
            return _error(400, "validation", str(exc), path)
        try:
            hmap = homogeneity_map(grid, signed=doc.signed_convention)
        except ZeroReferenceError as exc:
            return _error(422, "numeric", str(exc))
        mask = homogeneous_mask(hmap, float(threshold))
        square = largest_inscribed_square(mask, grid.region)
        volume = square_volume_report(square) if square is not None else None
        return {
            "threshold_percent": float(threshold),
            "signed_convention": doc.signed_convention,
            "b_center_t": hmap.b_center,
            "mask_rle": [[[int(a), int(b)] for a, b in row] for row in mask_to_rle(mask)],
            "square": square_payload(square),
            "volume": volume_payload(volume),
            "note": None if square is not None else "mask is empty: no square to inscribe",
        }

    static_root = Path(frontend_dir) if frontend_dir else Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if static_root.is_dir():
        app.mount("/", StaticFiles(directory=str(static_root), html=True), name="ui")

    return app


app = create_app()
