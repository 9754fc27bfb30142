"""HTTP service: stateless placement feed for game clients.

Every response is a pure function of the query string, so fair
competition is a matter of handing the same URL to every competitor.
Validation failures come back as 400 with {"error": "..."} rather than
the framework's default 422 shape.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .logistic import DegenerateOrbitError
from .placement import GridError, GridSpec
from .schemas import render_placement_json

app = FastAPI(
    title="chaosgrid",
    description="Reproducible chaotic placement feed for grid games",
    version="0.1.0",
)

# The browser demo is served from a different origin during development.
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["GET"],
    allow_headers=["*"],
)


def _bad_request(message: str) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": message})


@app.exception_handler(RequestValidationError)
async def _validation_error(request, exc: RequestValidationError):
    first = exc.errors()[0]
    where = ".".join(str(part) for part in first.get("loc", ()))
    return _bad_request(f"{where}: {first.get('msg', 'invalid request')}")


def _parse_int(raw: str, name: str) -> int:
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc


@app.get("/api/health")
async def health():
    return "ok"


@app.get("/api/placements")
async def get_placements(
    x0: str,
    r: str,
    width: str,
    height: str,
    mode: str = "competition",
    count: str | None = None,
):
    """Placement order as the shared JSON wire schema; identical query -> identical bytes."""
    try:
        grid = GridSpec(width=_parse_int(width, "width"), height=_parse_int(height, "height"))
        parsed_count = None if count is None else _parse_int(count, "count")
        body = render_placement_json(x0, r, grid, mode, parsed_count)
    except (ValueError, GridError, DegenerateOrbitError) as exc:
        return _bad_request(str(exc))
    return Response(content=body, media_type="application/json")
