"""Deterministic fixture generators with known ground truth.

Nothing here imitates real micrographs. The generators exist so tests
and demos can assert exact expected counts: every placement decision is
seeded, and returned truth records describe what was drawn.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .raster import GrayImage, LabelMap, connected_components

_MAX_PLACEMENT_ATTEMPTS = 20000


@dataclass(frozen=True)
class DiskSpec:
    """Center and radius of one drawn object, in pixel units."""

    cx: float
    cy: float
    r: float


@dataclass(frozen=True)
class PhantomTruth:
    rings: tuple[DiskSpec, ...]
    bubbles: tuple[DiskSpec, ...]


def _paint_annulus(canvas: np.ndarray, spec: DiskSpec, r_inner: float, value: float) -> None:
    h, w = canvas.shape
    x0 = max(0, int(math.floor(spec.cx - spec.r - 1)))
    x1 = min(w - 1, int(math.ceil(spec.cx + spec.r + 1)))
    y0 = max(0, int(math.floor(spec.cy - spec.r - 1)))
    y1 = min(h - 1, int(math.ceil(spec.cy + spec.r + 1)))
    yy, xx = np.mgrid[y0 : y1 + 1, x0 : x1 + 1]
    d2 = (xx - spec.cx) ** 2 + (yy - spec.cy) ** 2
    sel = d2 <= spec.r**2
    if r_inner > 0:
        sel &= d2 > r_inner**2
    canvas[y0 : y1 + 1, x0 : x1 + 1][sel] = value


def _place(
    rng: np.random.Generator,
    r: float,
    width: int,
    height: int,
    border: float,
    accepts,
) -> DiskSpec:
    lo_x, hi_x = r + border, width - 1 - r - border
    lo_y, hi_y = r + border, height - 1 - r - border
    if lo_x >= hi_x or lo_y >= hi_y:
        raise ValueError("image too small for the requested objects")
    for _ in range(_MAX_PLACEMENT_ATTEMPTS):
        spec = DiskSpec(rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y), r)
        if accepts(spec):
            return spec
    raise RuntimeError("could not place an object; image too crowded")


def ring_phantom(
    width: int,
    height: int,
    n_rings: int,
    n_bubbles: int = 0,
    *,
    seed: int = 0,
    background: int = 200,
    ring_intensity: int = 110,
    bubble_intensity: int = 90,
    ring_diameter: tuple[float, float] = (15.0, 40.0),
    bubble_diameter: tuple[float, float] = (60.0, 140.0),
    ring_thickness: float = 2.0,
    noise_sigma: float = 2.0,
) -> tuple[GrayImage, PhantomTruth]:
    """Flat background with closed dark rings and filled dark disks.

    Rings stand in for translucent crystals, disks for air bubbles.
    Placement keeps everything well separated: rings never merge under
    closing, and a bubble's exclusion halo never reaches a ring's
    bounding box. Gaussian noise is added last.
    """
    rng = np.random.default_rng(seed)

    bubbles: list[DiskSpec] = []
    for _ in range(n_bubbles):
        r = rng.uniform(*bubble_diameter) / 2.0
        bubbles.append(
            _place(
                rng,
                r,
                width,
                height,
                border=12.0,
                accepts=lambda s: all(
                    math.hypot(s.cx - o.cx, s.cy - o.cy) >= s.r + o.r + 10 for o in bubbles
                ),
            )
        )

    rings: list[DiskSpec] = []

    def ring_ok(s: DiskSpec) -> bool:
        for o in rings:
            if math.hypot(s.cx - o.cx, s.cy - o.cy) < s.r + o.r + 12:
                return False
        for b in bubbles:
            # 1.5x covers the ring's bounding-box diagonal plus exclusion margin
            if math.hypot(s.cx - b.cx, s.cy - b.cy) < 1.5 * s.r + b.r + 15:
                return False
        return True

    for _ in range(n_rings):
        r = rng.uniform(*ring_diameter) / 2.0
        rings.append(_place(rng, r, width, height, border=25.0, accepts=ring_ok))

    canvas = np.full((height, width), float(background))
    for b in bubbles:
        _paint_annulus(canvas, b, 0.0, float(bubble_intensity))
    for s in rings:
        _paint_annulus(canvas, s, s.r - ring_thickness, float(ring_intensity))
    if noise_sigma > 0:
        canvas += rng.normal(0.0, noise_sigma, canvas.shape)
    pixels = np.clip(np.rint(canvas), 0, 255).astype(np.uint8)
    return GrayImage(pixels), PhantomTruth(tuple(rings), tuple(bubbles))


def star_blob_labels(
    width: int,
    height: int,
    n_blobs: int,
    *,
    seed: int = 0,
    base_radius: tuple[float, float] = (9.0, 15.0),
    wobble: float = 0.25,
    gap: float = 4.0,
) -> LabelMap:
    """Disjoint solid blobs, each star-convex about its own center.

    Radii follow r(theta) = base * (1 + sum of low-order harmonics)
    with total harmonic amplitude at most `wobble`, so every blob is
    connected, roundish, and star-shaped by construction. Labels are
    numbered 1..n in raster order of each blob's first pixel.
    """
    rng = np.random.default_rng(seed)
    harmonics = (2, 3, 4)

    placed: list[tuple[float, float, float, np.ndarray, np.ndarray, float]] = []
    for _ in range(n_blobs):
        base = rng.uniform(*base_radius)
        amps = rng.uniform(0.0, wobble / len(harmonics), len(harmonics))
        phases = rng.uniform(0.0, 2.0 * math.pi, len(harmonics))
        r_max = base * (1.0 + float(amps.sum()))
        lo_x, hi_x = r_max + 2, width - r_max - 2
        lo_y, hi_y = r_max + 2, height - r_max - 2
        if lo_x >= hi_x or lo_y >= hi_y:
            raise ValueError("canvas too small for the requested blobs")
        for attempt in range(_MAX_PLACEMENT_ATTEMPTS):
            cx = rng.uniform(lo_x, hi_x)
            cy = rng.uniform(lo_y, hi_y)
            if all(
                math.hypot(cx - px, cy - py) >= r_max + pr + gap
                for px, py, pr, _, _, _ in placed
            ):
                placed.append((cx, cy, r_max, amps, phases, base))
                break
        else:
            raise RuntimeError("could not place a blob; canvas too crowded")

    labels = np.zeros((height, width), dtype=np.int32)
    for idx, (cx, cy, r_max, amps, phases, base) in enumerate(placed, start=1):
        x0 = max(0, int(math.floor(cx - r_max - 1)))
        x1 = min(width - 1, int(math.ceil(cx + r_max + 1)))
        y0 = max(0, int(math.floor(cy - r_max - 1)))
        y1 = min(height - 1, int(math.ceil(cy + r_max + 1)))
        yy, xx = np.mgrid[y0 : y1 + 1, x0 : x1 + 1]
        dx = xx + 0.5 - cx
        dy = yy + 0.5 - cy
        theta = np.arctan2(dy, dx)
        radius = base * (
            1.0
            + sum(a * np.cos(h * theta + ph) for h, a, ph in zip(harmonics, amps, phases))
        )
        sel = dx * dx + dy * dy <= radius * radius
        labels[y0 : y1 + 1, x0 : x1 + 1][sel] = idx

    # renumber by raster order and confirm the blobs really are disjoint
    relabeled = connected_components(labels > 0, 8)
    if relabeled.num_labels != n_blobs:
        raise RuntimeError("blob placement produced touching or split blobs")
    return relabeled
