"""HTTP analysis service.

One process serves the whole flow: the UI and scripted clients POST
base64 images and read back the result document. Nothing from a
request is ever written to disk; the only durable state is the
analysis counter, a plain-text integer file swapped in atomically.
"""

from __future__ import annotations

import base64
import binascii
import logging
import os
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Literal

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, ConfigDict

from . import __version__
from .errors import (
    CorruptImageError,
    CrystalCountError,
    DimensionMismatchError,
    ImageTooSmallError,
    MissingMapError,
    ParamError,
    RdmFormatError,
    UnsupportedFormatError,
)
from .pipeline import (
    analyze_bytes,
    bubble_preview,
    bubbles_document,
    result_document,
    to_wire_json,
)

log = logging.getLogger("crystalcount.service")

DEFAULT_PORT = 8080
DEFAULT_MAX_UPLOAD = 32 * 1024 * 1024

_BAD_REQUEST_ERRORS = (
    ParamError,
    UnsupportedFormatError,
    CorruptImageError,
    DimensionMismatchError,
    ImageTooSmallError,
    RdmFormatError,
)


class _PayloadTooLarge(CrystalCountError):
    pass


@dataclass(frozen=True)
class ServiceConfig:
    state_dir: Path = field(default_factory=lambda: Path.home() / ".crystalcount")
    port: int = DEFAULT_PORT
    max_upload_bytes: int = DEFAULT_MAX_UPLOAD
    workers: int | None = None  # None: one per processor core
    cors_origins: tuple[str, ...] = ("*",)
    frontend_dir: Path | None = None

    @classmethod
    def from_env(cls, env: dict[str, str] | None = None) -> "ServiceConfig":
        e = os.environ if env is None else env
        workers = e.get("CRYSTALCOUNT_WORKERS")
        frontend = e.get("CRYSTALCOUNT_FRONTEND")
        cors = tuple(
            s.strip() for s in e.get("CRYSTALCOUNT_CORS", "*").split(",") if s.strip()
        )
        return cls(
            state_dir=Path(e.get("CRYSTALCOUNT_STATE", str(Path.home() / ".crystalcount"))),
            port=int(e.get("CRYSTALCOUNT_PORT", str(DEFAULT_PORT))),
            max_upload_bytes=int(e.get("CRYSTALCOUNT_MAX_UPLOAD", str(DEFAULT_MAX_UPLOAD))),
            workers=int(workers) if workers else None,
            cors_origins=cors or ("*",),
            frontend_dir=Path(frontend) if frontend else None,
        )


class AnalysisCounter:
    """Durable monotone counter; rename-on-write keeps it crash-safe."""

    def __init__(self, path: Path):
        self._path = path
        self._lock = threading.Lock()

    def read(self) -> int:
        try:
            text = self._path.read_text().strip()
        except FileNotFoundError:
            return 0
        return int(text) if text else 0

    def increment(self) -> int:
        with self._lock:
            value = self.read() + 1
            tmp = self._path.with_name(self._path.name + ".tmp")
            with open(tmp, "w") as f:
                f.write(f"{value}\n")
                f.flush()
                os.fsync(f.fileno())
            os.replace(tmp, self._path)
            return value


class AnalyzeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid", protected_namespaces=())

    file_name: str
    image: str
    model: Literal["A", "B"]
    um_per_px: float
    params: dict[str, Any] | None = None
    rdm: str | None = None


class DetectBubblesRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    file_name: str
    image: str
    params: dict[str, Any] | None = None


def _decode_b64(value: str, what: str) -> bytes:
    try:
        return base64.b64decode(value, validate=True)
    except (binascii.Error, ValueError) as exc:
        raise ParamError(f"{what} is not valid base64") from exc


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    cfg = config or ServiceConfig.from_env()
    cfg.state_dir.mkdir(parents=True, exist_ok=True)
    counter = AnalysisCounter(cfg.state_dir / "total_analyses")
    workers = cfg.workers or os.cpu_count() or 1
    gate = threading.BoundedSemaphore(workers)

    app = FastAPI(title="crystalcount", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cfg.cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def _error(status: int, message: str) -> JSONResponse:
        return JSONResponse({"error": message}, status_code=status)

    @app.exception_handler(RequestValidationError)
    async def _on_validation(request: Request, exc: RequestValidationError):
        return _error(400, "malformed request")

    @app.exception_handler(MissingMapError)
    async def _on_missing_map(request: Request, exc: MissingMapError):
        return _error(422, str(exc))

    @app.exception_handler(_PayloadTooLarge)
    async def _on_too_large(request: Request, exc: _PayloadTooLarge):
        return _error(413, str(exc))

    for err_type in _BAD_REQUEST_ERRORS:

        @app.exception_handler(err_type)
        async def _on_bad_request(request: Request, exc: Exception):
            return _error(400, str(exc))

    @app.exception_handler(Exception)
    async def _on_internal(request: Request, exc: Exception):
        log.exception("analysis failed", exc_info=exc)
        return _error(500, "internal error")

    def _check_size(data: bytes) -> bytes:
        if len(data) > cfg.max_upload_bytes:
            raise _PayloadTooLarge(
                f"image exceeds the {cfg.max_upload_bytes} byte limit"
            )
        return data

    @app.post("/api/analyze")
    def analyze(req: AnalyzeRequest) -> Response:
        image = _check_size(_decode_b64(req.image, "image"))
        rdm = _decode_b64(req.rdm, "rdm") if req.rdm is not None else None
        with gate:
            outcome = analyze_bytes(
                image, req.file_name, req.model, req.um_per_px, req.params, rdm
            )
        body = to_wire_json(result_document(outcome))
        counter.increment()
        return Response(content=body, media_type="application/json")

    @app.post("/api/detect_bubbles")
    def detect(req: DetectBubblesRequest) -> Response:
        image = _check_size(_decode_b64(req.image, "image"))
        with gate:
            bubbles, overlay = bubble_preview(image, req.file_name, req.params)
        body = to_wire_json(bubbles_document(req.file_name, bubbles, overlay))
        return Response(content=body, media_type="application/json")

    @app.get("/api/stats")
    def stats() -> dict[str, int]:
        return {"total_analyses": counter.read()}

    @app.get("/api/health")
    def health() -> dict[str, str]:
        return {"status": "ok", "version": __version__}

    if cfg.frontend_dir is not None and cfg.frontend_dir.is_dir():
        app.mount("/", StaticFiles(directory=cfg.frontend_dir, html=True), name="ui")

    return app
