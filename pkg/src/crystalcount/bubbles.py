"""Air-bubble and dust detection plus exclusion-mask construction.

Slide preparation leaves large dark near-circular artifacts. They are
found as filled dark regions passing a size and a circularity gate,
and each is reported with its minimum enclosing circle so downstream
stages can mask a slightly inflated disk around it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy import ndimage

from .errors import ParamError
from .raster import (
    GrayImage,
    adaptive_threshold,
    connected_components,
    convex_hull,
    flood_background,
    polygon_perimeter,
    trace_boundary,
)

# window for the darkness threshold; bubbles are large, so the window is too
_DARK_BLOCK = 63


@dataclass(frozen=True)
class BubbleParams:
    min_equiv_diameter: float = 60.0
    min_circularity: float = 0.80
    margin: float = 5.0
    dark_threshold_offset: float = 10.0

    def __post_init__(self) -> None:
        if not 0.0 < self.min_circularity <= 1.0:
            raise ParamError("min_circularity must be in (0, 1]")
        if self.margin < 0:
            raise ParamError("margin must be >= 0")
        if self.min_equiv_diameter < 0:
            raise ParamError("min_equiv_diameter must be >= 0")


@dataclass
class BubbleRegion:
    """One detected artifact and its minimum enclosing circle."""

    center: tuple[float, float]
    radius: float
    area_px: int
    circularity: float


def _circle_two(a, b):
    cx = (a[0] + b[0]) / 2.0
    cy = (a[1] + b[1]) / 2.0
    return (cx, cy, math.hypot(a[0] - cx, a[1] - cy))


def _circumcircle(a, b, c):
    d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if abs(d) < 1e-12:
        return None
    a2 = a[0] ** 2 + a[1] ** 2
    b2 = b[0] ** 2 + b[1] ** 2
    c2 = c[0] ** 2 + c[1] ** 2
    ux = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d
    uy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d
    return (ux, uy, math.hypot(a[0] - ux, a[1] - uy))


def _contains(circle, p) -> bool:
    cx, cy, r = circle
    return math.hypot(p[0] - cx, p[1] - cy) <= r + 1e-7 * (1.0 + r)


def _widest_two_point(points) -> tuple[float, float, float]:
    best = None
    for i, a in enumerate(points):
        for b in points[i + 1 :]:
            c = _circle_two(a, b)
            if best is None or c[2] > best[2]:
                best = c
    return best


def min_enclosing_circle(points: Iterable[Sequence[float]]) -> tuple[float, float, float]:
    """Smallest circle containing every point, as (cx, cy, r).

    Incremental construction over a fixed shuffle: whenever a point
    falls outside the current circle it must lie on the boundary of the
    final one, so the circle is rebuilt with it pinned.
    """
    pts = [(float(p[0]), float(p[1])) for p in points]
    if not pts:
        raise ValueError("min_enclosing_circle needs at least one point")
    random.Random(0).shuffle(pts)
    circle = (pts[0][0], pts[0][1], 0.0)
    for i, p in enumerate(pts[1:], start=1):
        if _contains(circle, p):
            continue
        circle = (p[0], p[1], 0.0)
        for j, q in enumerate(pts[:i]):
            if _contains(circle, q):
                continue
            circle = _circle_two(p, q)
            for s in pts[:j]:
                if _contains(circle, s):
                    continue
                circle = _circumcircle(p, q, s) or _widest_two_point((p, q, s))
    return circle


def detect_bubbles(img: GrayImage, p: BubbleParams | None = None) -> list[BubbleRegion]:
    """Find large near-circular dark artifacts.

    Dark regions are filled through their enclosed interiors first:
    a bubble images as a dark rim around a center the local threshold
    misses, and only the filled shape has meaningful area and boundary.
    """
    p = p or BubbleParams()
    dark = adaptive_threshold(img, _DARK_BLOCK, p.dark_threshold_offset)
    filled = flood_background(dark)
    labels = connected_components(filled, 8)
    out: list[BubbleRegion] = []
    boxes = ndimage.find_objects(labels.labels, max_label=labels.num_labels)
    for i, box in enumerate(boxes, start=1):
        if box is None:
            continue
        region = labels.labels[box] == i
        area = int(np.count_nonzero(region))
        if 2.0 * math.sqrt(area / math.pi) < p.min_equiv_diameter:
            continue
        contour = trace_boundary(region)
        perimeter = polygon_perimeter(contour)
        if perimeter <= 0.0:
            continue
        circularity = 4.0 * math.pi * area / perimeter**2
        if circularity < p.min_circularity:
            continue
        y0, x0 = box[0].start, box[1].start
        hull = convex_hull(np.array(contour, dtype=np.float64))
        cx, cy, r = min_enclosing_circle(hull)
        out.append(
            BubbleRegion(
                center=(cx + x0, cy + y0),
                radius=r,
                area_px=area,
                circularity=circularity,
            )
        )
    return out


def exclusion_mask(
    bubbles: Iterable[BubbleRegion], dims: tuple[int, int], margin: float = 5.0
) -> np.ndarray:
    """Union of every bubble's enclosing circle inflated by margin px."""
    if margin < 0:
        raise ParamError("margin must be >= 0")
    w, h = dims
    mask = np.zeros((h, w), dtype=bool)
    for b in bubbles:
        r = b.radius + margin
        cx, cy = b.center
        x0 = max(0, int(math.floor(cx - r)))
        x1 = min(w - 1, int(math.ceil(cx + r)))
        y0 = max(0, int(math.floor(cy - r)))
        y1 = min(h - 1, int(math.ceil(cy + r)))
        if x0 > x1 or y0 > y1:
            continue
        yy, xx = np.mgrid[y0 : y1 + 1, x0 : x1 + 1]
        mask[y0 : y1 + 1, x0 : x1 + 1] |= (xx - cx) ** 2 + (yy - cy) ** 2 <= r * r
    return mask
