"""Stateless JSON-over-HTTP facade over the api handlers.

Every route is a pure function of the request body; there are no
sessions and no shared mutable state, so any parallelism is safe.
Domain errors come back as 400 with an ApiError body; unknown routes as
404 in the same shape.  Binds to loopback unless asked otherwise.
"""

from __future__ import annotations

import os
from typing import Any, Callable, Dict

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import api
from .errors import InvalidArgument, MechlinError
from .wire import api_error

DEFAULT_PORT = 8787

ROUTES: Dict[str, Callable[[Dict[str, Any]], Dict[str, Any]]] = {
    "/v1/parse": api.handle_parse,
    "/v1/factor": api.handle_factor,
    "/v1/det": api.handle_det,
    "/v1/solve": api.handle_solve,
    "/v1/inverse": api.handle_inverse,
    "/v1/eig": api.handle_eig,
    "/v1/svd": api.handle_svd,
    "/v1/companion": api.handle_companion,
    "/v1/param/rref": api.handle_param_rref,
    "/v1/gen": api.handle_gen,
    "/v1/apply": api.handle_apply,
    "/v1/project": api.handle_project,
    "/v1/exam/mc": api.handle_exam_mc,
}


def build_app() -> FastAPI:
    app = FastAPI(title="mechlin", docs_url=None, redoc_url=None, openapi_url=None)

    @app.get("/v1/health")
    async def health():
        return {"ok": True}

    def register(path: str, handler: Callable[[Dict[str, Any]], Dict[str, Any]]):
        async def endpoint(request: Request):
            try:
                body = await request.json()
            except Exception:
                raise InvalidArgument("request body must be a JSON object") from None
            if not isinstance(body, dict):
                raise InvalidArgument("request body must be a JSON object")
            return JSONResponse(handler(body))

        app.add_api_route(path, endpoint, methods=["POST"], name=path.strip("/").replace("/", "_"))

    for path, handler in ROUTES.items():
        register(path, handler)

    @app.exception_handler(MechlinError)
    async def mechlin_error(request: Request, exc: MechlinError):
        return JSONResponse(status_code=400, content=api_error(exc))

    @app.exception_handler(404)
    async def not_found(request: Request, exc):
        return JSONResponse(
            status_code=404,
            content={
                "code": "NotFound",
                "message": f"unknown route {request.url.path}",
                "detail": {},
            },
        )

    return app


def resolve_port(flag_port: int = None) -> int:
    """MECHLIN_PORT wins over the flag; the flag wins over the default."""
    env = os.environ.get("MECHLIN_PORT")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InvalidArgument(f"MECHLIN_PORT={env!r} is not a port number") from None
    return flag_port if flag_port is not None else DEFAULT_PORT


def serve(port: int = None, host: str = "127.0.0.1"):
    import uvicorn

    uvicorn.run(build_app(), host=host, port=resolve_port(port), log_level="warning")
