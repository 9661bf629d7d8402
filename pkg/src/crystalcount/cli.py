"""Command-line front end: analyze, batch, encode, serve.

analyze writes the same result document the service returns, byte for
byte, because both call the one pipeline entry point.
"""

from __future__ import annotations

import argparse
import json
import socket
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path

import numpy as np
from PIL import Image

from .errors import CrystalCountError
from .pipeline import analyze_bytes, result_document, to_wire_json
from .raster import SUPPORTED_FORMATS, LabelMap
from .service import ServiceConfig, create_app
from .starconvex import encode_ground_truth, write_rdm

_IMAGE_SUFFIXES = {".png", ".bmp", ".tif", ".tiff"}

_INPUT_ERRORS = (
    CrystalCountError,
    FileNotFoundError,
    IsADirectoryError,
    NotADirectoryError,
    PermissionError,
    json.JSONDecodeError,
)


def _load_overrides(path: str | None) -> dict | None:
    if path is None:
        return None
    with open(path) as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise CrystalCountError("parameter file must hold a flat JSON object")
    return data


def _run_one(
    image_path: Path, args: argparse.Namespace, overrides: dict | None
) -> tuple[str, bytes]:
    rdm = Path(args.rdm).read_bytes() if args.rdm else None
    outcome = analyze_bytes(
        image_path.read_bytes(),
        image_path.name,
        args.model,
        args.um_per_px,
        overrides,
        rdm,
    )
    return to_wire_json(result_document(outcome)), outcome.overlay_png


def _cmd_analyze(args: argparse.Namespace) -> int:
    overrides = _load_overrides(args.params)
    doc, overlay = _run_one(Path(args.image), args, overrides)
    if args.json:
        Path(args.json).write_bytes(doc.encode())
    else:
        sys.stdout.write(doc + "\n")
    if args.overlay:
        Path(args.overlay).write_bytes(overlay)
    return 0


def _cmd_batch(args: argparse.Namespace) -> int:
    overrides = _load_overrides(args.params)
    src = Path(args.dir)
    if not src.is_dir():
        raise NotADirectoryError(f"{src} is not a directory")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    images = sorted(
        p for p in src.iterdir() if p.is_file() and p.suffix.lower() in _IMAGE_SUFFIXES
    )

    def work(path: Path) -> tuple[Path, str | None, str | None]:
        try:
            doc, _ = _run_one(path, args, overrides)
        except Exception as exc:  # a bad file must not sink the batch
            return path, None, str(exc)
        target = out / (path.stem + ".json")
        target.write_bytes(doc.encode())
        parsed = json.loads(doc)
        return path, f"{path.name} {parsed['seed_count']}", None

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        for path, line, problem in pool.map(work, images):
            if problem is not None:
                print(f"warning: skipping {path.name}: {problem}", file=sys.stderr)
            else:
                print(line, flush=True)
    return 0


def _cmd_encode(args: argparse.Namespace) -> int:
    path = Path(args.labels)
    with Image.open(path) as im:
        if im.format != "PNG":
            raise CrystalCountError(f"{path.name} is not a PNG label image")
        arr = np.asarray(im)
    if arr.ndim != 2:
        raise CrystalCountError("label image must be single-channel")
    labels = arr.astype(np.int64)
    ids = np.unique(labels)
    ids = ids[ids > 0]
    dense = np.zeros_like(labels, dtype=np.int32)
    for new, old in enumerate(ids, start=1):
        dense[labels == old] = new
    rdm = encode_ground_truth(LabelMap(dense, int(ids.size)))
    write_rdm(rdm, args.out)
    return 0


def _run_uvicorn(app, sock: socket.socket) -> None:
    import uvicorn

    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    server.run(sockets=[sock])


def _cmd_serve(args: argparse.Namespace) -> int:
    cfg = ServiceConfig.from_env()
    if args.state_dir:
        cfg = replace(cfg, state_dir=Path(args.state_dir))
    if args.frontend:
        cfg = replace(cfg, frontend_dir=Path(args.frontend))
    port = cfg.port if args.port is None else args.port
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, port))
    except OSError as exc:
        sock.close()
        print(f"error: cannot bind {args.host}:{port}: {exc}", file=sys.stderr)
        return 1
    bound_host, bound_port = sock.getsockname()[:2]
    print(f"listening on http://{bound_host}:{bound_port}", flush=True)
    _run_uvicorn(create_app(cfg), sock)
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystalcount",
        description="Count crystal seeds in microscope images "
        f"({', '.join(sorted(SUPPORTED_FORMATS))}).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_analysis_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--model", choices=("A", "B"), required=True)
        p.add_argument("--um-per-px", dest="um_per_px", type=float, required=True)
        p.add_argument("--params", help="flat JSON file of parameter overrides")
        p.add_argument("--rdm", help="radial map file (required for model B)")

    p = sub.add_parser("analyze", help="analyze one image")
    p.add_argument("image")
    add_analysis_flags(p)
    p.add_argument("--json", help="write the result document here instead of stdout")
    p.add_argument("--overlay", help="write the outlined PNG here")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("batch", help="analyze every image in a directory")
    p.add_argument("dir")
    add_analysis_flags(p)
    p.add_argument("--out", required=True, help="directory for result documents")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser("encode", help="turn a label PNG into a radial map file")
    p.add_argument("labels", help="16-bit grayscale PNG, pixel value = label id")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("serve", help="run the analysis service")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--state-dir", dest="state_dir")
    p.add_argument("--frontend", help="static directory to serve at /")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
