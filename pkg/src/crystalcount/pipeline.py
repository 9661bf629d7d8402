"""End-to-end analysis shared by the command line and the service.

Both front ends funnel through analyze_bytes and serialize with
to_wire_json, so a given image and parameter set produces the same
result document byte for byte no matter which door it came in.
"""

from __future__ import annotations

import base64
import io
import json
import math
from collections.abc import Callable, Mapping
from dataclasses import dataclass, fields, replace
from typing import Any

import numpy as np
from PIL import Image, ImageDraw

from .bubbles import BubbleParams, BubbleRegion, detect_bubbles, exclusion_mask
from .classical import ClassicalParams, CrystalInstance, analyze_classical
from .errors import DimensionMismatchError, MissingMapError, ParamError
from .raster import GrayImage, dim_bright_pixels, image_from_bytes
from .starconvex import RadialMap, StarParams, analyze_star, parse_rdm
from .stats import AnalysisResult, Calibration, compute_result, equivalent_diameter_um

INSTANCE_OUTLINE_RGB = (57, 255, 20)
BUBBLE_OUTLINE_RGB = (0, 200, 0)

# maps an external predictor into the deep path: given the dimmed
# image, return its radial map
MapProvider = Callable[[GrayImage], RadialMap]


@dataclass(frozen=True)
class PipelineParams:
    classical: ClassicalParams
    bubbles: BubbleParams
    star: StarParams


_PARAM_GROUPS = (
    ("classical", ClassicalParams),
    ("bubbles", BubbleParams),
    ("star", StarParams),
)


def _coerce(value: Any, default: Any) -> Any:
    """Line up JSON numbers with the field's declared kind."""
    if isinstance(value, bool):
        return value
    if isinstance(default, bool):
        return value
    if isinstance(default, int) and isinstance(value, float) and value.is_integer():
        return int(value)
    if isinstance(default, float) and isinstance(value, int):
        return float(value)
    return value


def params_from_overrides(overrides: Mapping[str, Any] | None) -> PipelineParams:
    """Route a flat name/value record onto the three parameter sets.

    Field names are unique across the sets, so a flat record is
    unambiguous. Unknown names are rejected rather than ignored: a
    typo silently reverting to a default would be invisible.
    """
    groups = {name: cls() for name, cls in _PARAM_GROUPS}
    if not overrides:
        return PipelineParams(**groups)
    routing: dict[str, tuple[str, Any]] = {}
    for name, cls in _PARAM_GROUPS:
        for f in fields(cls):
            routing[f.name] = (name, f.default)
    updates: dict[str, dict[str, Any]] = {name: {} for name, _ in _PARAM_GROUPS}
    for key, value in overrides.items():
        if key not in routing:
            raise ParamError(f"unknown parameter {key!r}")
        group, default = routing[key]
        updates[group][key] = _coerce(value, default)
    for name, kwargs in updates.items():
        if kwargs:
            groups[name] = replace(groups[name], **kwargs)
    return PipelineParams(**groups)


@dataclass(frozen=True)
class AnalysisOutcome:
    """Everything one analysis produced, before serialization."""

    result: AnalysisResult
    instances: list[CrystalInstance]
    bubbles: list[BubbleRegion]
    um_per_px: float
    overlay_png: bytes


def render_overlay(
    img: GrayImage,
    instances: list[CrystalInstance],
    bubbles: list[BubbleRegion],
) -> bytes:
    """PNG of the input with instance outlines and bubble circles."""
    rgb = np.repeat(img.pixels[:, :, None], 3, axis=2)
    for inst in instances:
        for x, y in inst.boundary:
            rgb[y, x] = INSTANCE_OUTLINE_RGB
    im = Image.fromarray(rgb, mode="RGB")
    if bubbles:
        draw = ImageDraw.Draw(im)
        for b in bubbles:
            cx, cy = b.center
            r = b.radius
            draw.ellipse(
                (cx - r, cy - r, cx + r, cy + r), outline=BUBBLE_OUTLINE_RGB, width=2
            )
    buf = io.BytesIO()
    im.save(buf, format="PNG")
    return buf.getvalue()


def analyze_bytes(
    image_bytes: bytes,
    file_name: str,
    model: str,
    um_per_px: float,
    overrides: Mapping[str, Any] | None = None,
    rdm_bytes: bytes | None = None,
    map_provider: MapProvider | None = None,
) -> AnalysisOutcome:
    """Run one image through the selected model end to end."""
    if model not in ("A", "B"):
        raise ParamError(f"unknown model {model!r}")
    cal = Calibration(um_per_px)
    params = params_from_overrides(overrides)
    img = image_from_bytes(image_bytes)
    bubbles = detect_bubbles(img, params.bubbles)
    excl = exclusion_mask(bubbles, (img.width, img.height), params.bubbles.margin)

    if model == "A":
        instances = analyze_classical(img, params.classical, excl)
    else:
        dimmed = dim_bright_pixels(img)
        if map_provider is not None:
            m = map_provider(dimmed)
        elif rdm_bytes is not None:
            m = parse_rdm(rdm_bytes)
        else:
            raise MissingMapError("model B needs a radial map")
        if (m.width, m.height) != (img.width, img.height):
            raise DimensionMismatchError(
                f"map is {m.width}x{m.height}, image is {img.width}x{img.height}"
            )
        instances = analyze_star(m, params.star, excl)

    result = compute_result(
        instances, excl, (img.width, img.height), cal, file_name, model
    )
    overlay = render_overlay(img, instances, bubbles)
    return AnalysisOutcome(result, instances, bubbles, um_per_px, overlay)


def bubble_preview(
    image_bytes: bytes,
    file_name: str,
    overrides: Mapping[str, Any] | None = None,
) -> tuple[list[BubbleRegion], bytes]:
    """The bubble stage alone, with a highlighted preview image."""
    params = params_from_overrides(overrides)
    img = image_from_bytes(image_bytes)
    bubbles = detect_bubbles(img, params.bubbles)
    return bubbles, render_overlay(img, [], bubbles)


def result_document(outcome: AnalysisOutcome) -> dict[str, Any]:
    """The wire layout of one analysis, in its canonical key order."""
    r = outcome.result
    return {
        "file_name": r.file_name,
        "model": r.model,
        "seed_count": r.seed_count,
        "crystals_per_mm2": r.crystals_per_mm2,
        "mean_size_um": r.mean_size_um,
        "coverage_percent": r.coverage_percent,
        "analyzed_area_mm2": r.analyzed_area_mm2,
        "bubble_area_fraction": r.bubble_area_fraction,
        "histogram": {
            "edges_um": list(r.histogram.edges_um),
            "counts": list(r.histogram.counts),
        },
        "instances": [
            {
                "id": inst.id,
                "centroid": [inst.centroid[0], inst.centroid[1]],
                "area_px": inst.area_px,
                "equiv_diameter_um": equivalent_diameter_um(
                    inst.area_px, outcome.um_per_px
                ),
                "boundary": [[x, y] for x, y in inst.boundary],
            }
            for inst in outcome.instances
        ],
        "overlay_png": base64.b64encode(outcome.overlay_png).decode("ascii"),
    }


def bubbles_document(
    file_name: str, bubbles: list[BubbleRegion], overlay_png: bytes
) -> dict[str, Any]:
    return {
        "file_name": file_name,
        "bubbles": [
            {
                "center": [b.center[0], b.center[1]],
                "radius": b.radius,
                "area_px": b.area_px,
                "circularity": b.circularity,
            }
            for b in bubbles
        ],
        "overlay_png": base64.b64encode(overlay_png).decode("ascii"),
    }


def _round_floats(value: Any) -> Any:
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite number in result document: {value!r}")
        return float(f"{value:.6g}")
    if isinstance(value, dict):
        return {k: _round_floats(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round_floats(v) for v in value]
    return value


def to_wire_json(document: Mapping[str, Any]) -> str:
    """Serialize compactly with floats kept to 6 significant digits."""
    return json.dumps(_round_floats(dict(document)), separators=(",", ":"))
