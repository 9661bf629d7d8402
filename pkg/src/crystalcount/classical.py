"""Counting pipeline for standard-resolution microscope images.

The path: extract crystal boundaries from two cooperating views of the
image, cluster them into connected components, drop clusters that
cannot be crystals, and report one instance record per survivor.
Translucent crystals image as rings, so enclosed openings drive both
the filtering rules and the per-cluster crystal count.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .errors import DimensionMismatchError, ImageTooSmallError, ParamError
from .raster import (
    GrayImage,
    LabelMap,
    adaptive_threshold,
    box_sum,
    canny_edges,
    connected_components,
    convex_hull_area,
    count_holes,
    flood_background,
    morph,
    trace_boundary,
)


def _require_odd(name: str, value: int, minimum: int) -> None:
    if not isinstance(value, int) or value < minimum or value % 2 == 0:
        raise ParamError(f"{name} must be an odd integer >= {minimum}, got {value!r}")


@dataclass(frozen=True)
class ClassicalParams:
    """Tuning knobs for the standard-resolution pipeline.

    The bright/dark kernel pairs realize lighting-adaptive smoothing
    and closing: tiles at or above the global mean intensity use the
    bright (smaller) kernel, darker tiles the larger one.
    """

    block: int = 31
    offset: float = 5.0
    canny_low: float = 50.0
    canny_high: float = 120.0
    smooth_bright_k: int = 3
    smooth_dark_k: int = 5
    close_bright_k: int = 3
    close_dark_k: int = 5
    tile: int = 64
    min_area_0or1_hole: int = 20
    min_area_multi_hole: int = 5
    solidity_max_0hole: float = 0.6

    def __post_init__(self) -> None:
        _require_odd("block", self.block, 3)
        for name in ("smooth_bright_k", "smooth_dark_k", "close_bright_k", "close_dark_k"):
            _require_odd(name, getattr(self, name), 1)
        if not 0 <= self.canny_low <= self.canny_high:
            raise ParamError("need 0 <= canny_low <= canny_high")
        if self.tile < 1:
            raise ParamError(f"tile must be >= 1, got {self.tile!r}")
        if self.min_area_0or1_hole < 0 or self.min_area_multi_hole < 0:
            raise ParamError("minimum areas must be >= 0")
        if not 0.0 < self.solidity_max_0hole <= 1.0:
            raise ParamError("solidity_max_0hole must be in (0, 1]")


@dataclass
class CrystalInstance:
    """One surviving cluster.

    crystal_count applies the opening rule: two or more openings mean
    an overlap of that many crystals, anything else counts as one.
    boundary is the outer contour as pixel coordinates in trace order.
    """

    id: int
    area_px: int
    centroid: tuple[float, float]
    hole_count: int
    crystal_count: int
    boundary: list[tuple[int, int]]


def bright_tile_map(img: GrayImage, tile: int) -> np.ndarray:
    """Per-pixel flag: is this pixel's tile at least as bright as the image?

    Tiles are tile x tile, with partial tiles at the right/bottom
    edges. Comparison is exact integer cross-multiplication.
    """
    if tile < 1:
        raise ParamError(f"tile must be >= 1, got {tile!r}")
    px = img.pixels.astype(np.int64)
    h, w = px.shape
    ys = np.arange(0, h, tile)
    xs = np.arange(0, w, tile)
    sums = np.add.reduceat(np.add.reduceat(px, ys, axis=0), xs, axis=1)
    tile_h = np.minimum(ys + tile, h) - ys
    tile_w = np.minimum(xs + tile, w) - xs
    areas = tile_h[:, None] * tile_w[None, :]
    bright = sums * (h * w) >= int(px.sum()) * areas
    return np.repeat(np.repeat(bright, tile_h, axis=0), tile_w, axis=1)


def _mean_filter(px: np.ndarray, k: int) -> np.ndarray:
    if k == 1:
        return px.copy()
    n = k * k
    # n is odd, so sums never land on an exact half: +n//2 rounds to nearest
    return ((box_sum(px, k, replicate=True) + n // 2) // n).astype(np.uint8)


def preprocess(img: GrayImage, p: ClassicalParams | None = None) -> np.ndarray:
    """Binary mask of crystal-boundary pixels.

    Two views must both vote for a pixel: the local-threshold view,
    which ignores uneven lighting but also fires on any dark speck, and
    the edge view (smooth, edge-detect, close, flood from the border),
    whose fill admits whole enclosed interiors. The intersection keeps
    ring boundaries while dropping filled interiors and specks that
    only one view believes in.
    """
    p = p or ClassicalParams()
    if img.height < p.tile or img.width < p.tile:
        raise ImageTooSmallError(
            f"image {img.width}x{img.height} is smaller than the {p.tile} px adaptation tile"
        )
    bright = bright_tile_map(img, p.tile)
    dark_view = adaptive_threshold(img, p.block, p.offset)

    if p.smooth_bright_k == p.smooth_dark_k:
        smoothed = _mean_filter(img.pixels, p.smooth_bright_k)
    else:
        smoothed = np.where(
            bright,
            _mean_filter(img.pixels, p.smooth_bright_k),
            _mean_filter(img.pixels, p.smooth_dark_k),
        )
    edges = canny_edges(GrayImage(smoothed), p.canny_low, p.canny_high)
    if p.close_bright_k == p.close_dark_k:
        closed = morph(edges, "close", p.close_bright_k)
    else:
        closed = np.where(
            bright,
            morph(edges, "close", p.close_bright_k),
            morph(edges, "close", p.close_dark_k),
        )
    edge_view = flood_background(closed)
    return dark_view & edge_view


def cluster_keep_decision(
    hole_count: int, area_px: int, hull_area: float, p: ClassicalParams
) -> bool:
    """Size and shape gates for one cluster.

    Clusters with at most one opening hold at most one crystal and need
    20 px of support by default; multi-opening clusters are overlaps
    and need only 5. Among large hole-free clusters, only sparse open
    contours (area well under their hull area) are plausibly crystals
    with a faint unclosed edge; compact ones are dust.
    """
    if hole_count <= 1 and area_px < p.min_area_0or1_hole:
        return False
    if hole_count >= 2 and area_px < p.min_area_multi_hole:
        return False
    if hole_count == 0:
        if hull_area <= 0.0:
            return False  # collinear smear, cannot be an open contour
        return area_px <= p.solidity_max_0hole * hull_area
    return True


def remove_small_clusters(labels: LabelMap, p: ClassicalParams | None = None) -> LabelMap:
    """Drop clusters that fail their gate, relabeling survivors 1..n.

    Survivor numbering preserves the incoming label order.
    """
    p = p or ClassicalParams()
    lab = labels.labels
    lut = np.zeros(labels.num_labels + 1, dtype=np.int32)
    kept = 0
    boxes = ndimage.find_objects(lab, max_label=labels.num_labels)
    for i, box in enumerate(boxes, start=1):
        if box is None:
            continue
        region = lab[box] == i
        area = int(np.count_nonzero(region))
        holes = count_holes(region)
        hull = convex_hull_area(region) if holes == 0 else 0.0
        if cluster_keep_decision(holes, area, hull, p):
            kept += 1
            lut[i] = kept
    return LabelMap(lut[lab], kept)


def instances_from_labels(labels: LabelMap) -> list[CrystalInstance]:
    """One CrystalInstance per label, ids following label order."""
    out: list[CrystalInstance] = []
    lab = labels.labels
    boxes = ndimage.find_objects(lab, max_label=labels.num_labels)
    for i, box in enumerate(boxes, start=1):
        if box is None:
            continue
        region = lab[box] == i
        ys, xs = np.nonzero(region)
        holes = count_holes(region)
        y0, x0 = box[0].start, box[1].start
        contour = trace_boundary(region)
        out.append(
            CrystalInstance(
                id=len(out) + 1,
                area_px=int(ys.size),
                centroid=(float(xs.mean()) + x0, float(ys.mean()) + y0),
                hole_count=holes,
                crystal_count=max(1, holes),
                boundary=[(x + x0, y + y0) for x, y in contour],
            )
        )
    return out


def analyze_classical(
    img: GrayImage,
    p: ClassicalParams | None = None,
    exclusion: np.ndarray | None = None,
) -> list[CrystalInstance]:
    """Run the full pipeline and return instance records.

    Pixels under the exclusion mask never enter clustering, and any
    surviving cluster whose bounding box still touches the exclusion is
    dropped: a region that brushes an excluded zone cannot be measured
    reliably.
    """
    p = p or ClassicalParams()
    if exclusion is not None and exclusion.shape != (img.height, img.width):
        raise DimensionMismatchError(
            f"exclusion {exclusion.shape} does not match image {(img.height, img.width)}"
        )
    mask = preprocess(img, p)
    exclude = exclusion is not None and bool(exclusion.any())
    if exclude:
        mask &= ~exclusion
    labels = connected_components(mask, 8)
    labels = remove_small_clusters(labels, p)
    if exclude and labels.num_labels:
        lut = np.zeros(labels.num_labels + 1, dtype=np.int32)
        kept = 0
        boxes = ndimage.find_objects(labels.labels, max_label=labels.num_labels)
        for i, box in enumerate(boxes, start=1):
            if box is None or exclusion[box].any():
                continue
            kept += 1
            lut[i] = kept
        labels = LabelMap(lut[labels.labels], kept)
    return instances_from_labels(labels)
