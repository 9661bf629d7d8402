"""Decoder for per-pixel star-convex polygon predictions.

The high-resolution path expects an external model to emit, per pixel,
an object probability and 32 radial boundary distances. This module
turns those maps into instances: threshold into candidates, suppress
overlaps greedily, rasterize the survivors. A ground-truth encoder
produces the same maps from a label image, so the whole decode path is
testable without any trained model.

Geometry convention here: pixel (x, y) occupies the unit square whose
center is the continuous point (x + 0.5, y + 0.5). A pixel belongs to
a polygon iff its center is inside by the even-odd rule.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import ndimage

from .classical import CrystalInstance
from .errors import (
    BadMagicError,
    DimensionMismatchError,
    DimensionOverflowError,
    ParamError,
    RdmFormatError,
    TruncatedFileError,
)
from .raster import LabelMap, trace_boundary

RAY_COUNT = 32

_MAGIC = b"RDM1"
_HEADER = struct.Struct("<4sIII")
_MAX_PAYLOAD = 2**31  # bytes of float payload a header may claim


@dataclass
class RadialMap:
    """Per-pixel probability and radial-distance planes.

    dist is laid out H x W x R with the ray index fastest-varying;
    ray k points along angle 2*pi*k/R in pixel coordinates.
    """

    width: int
    height: int
    rays: int
    prob: np.ndarray
    dist: np.ndarray

    def __post_init__(self) -> None:
        self.prob = np.ascontiguousarray(self.prob, dtype=np.float32)
        self.dist = np.ascontiguousarray(self.dist, dtype=np.float32)
        if self.width < 1 or self.height < 1 or self.rays < 1:
            raise ParamError("map dimensions must be positive")
        if self.prob.shape != (self.height, self.width):
            raise ParamError(f"prob shape {self.prob.shape} does not match header")
        if self.dist.shape != (self.height, self.width, self.rays):
            raise ParamError(f"dist shape {self.dist.shape} does not match header")
        if self.prob.size and (self.prob.min() < 0.0 or self.prob.max() > 1.0):
            raise ParamError("prob values must lie in [0, 1]")
        if self.dist.size:
            if self.dist.min() < 0.0:
                raise ParamError("dist values must be >= 0")
            if self.dist.max() > max(self.width, self.height):
                raise ParamError("dist values exceed the image extent")


@dataclass
class StarPolygon:
    """A candidate instance: center, R radial distances, and its score."""

    center: tuple[float, float]
    radii: np.ndarray
    score: float


@dataclass(frozen=True)
class StarParams:
    prob_threshold: float = 0.5
    nms_iou: float = 0.4
    grid_step: int = 1

    def __post_init__(self) -> None:
        if not 0.0 < self.prob_threshold < 1.0:
            raise ParamError("prob_threshold must be in (0, 1)")
        if not 0.0 < self.nms_iou < 1.0:
            raise ParamError("nms_iou must be in (0, 1)")
        if not isinstance(self.grid_step, int) or self.grid_step < 1:
            raise ParamError("grid_step must be an integer >= 1")


# ---------------------------------------------------------------------------
# file format


def serialize_rdm(m: RadialMap) -> bytes:
    header = _HEADER.pack(_MAGIC, m.height, m.width, m.rays)
    return header + m.prob.astype("<f4").tobytes() + m.dist.astype("<f4").tobytes()


def parse_rdm(data: bytes) -> RadialMap:
    if len(data) < 4 or data[:4] != _MAGIC:
        raise BadMagicError("not a radial map file")
    if len(data) < _HEADER.size:
        raise TruncatedFileError("header cut short")
    _, h, w, r = _HEADER.unpack_from(data)
    if h == 0 or w == 0 or r == 0:
        raise DimensionOverflowError("zero dimension in header")
    payload = 4 * h * w * (1 + r)
    if payload > _MAX_PAYLOAD:
        raise DimensionOverflowError(f"header claims {payload} payload bytes")
    expected = _HEADER.size + payload
    if len(data) < expected:
        raise TruncatedFileError(f"need {expected} bytes, have {len(data)}")
    if len(data) > expected:
        raise RdmFormatError(f"{len(data) - expected} trailing bytes after payload")
    prob = np.frombuffer(data, "<f4", h * w, offset=_HEADER.size).reshape(h, w)
    dist = np.frombuffer(data, "<f4", h * w * r, offset=_HEADER.size + 4 * h * w)
    return RadialMap(w, h, r, prob.copy(), dist.reshape(h, w, r).copy())


def write_rdm(m: RadialMap, path: str | Path) -> None:
    Path(path).write_bytes(serialize_rdm(m))


def read_rdm(path: str | Path) -> RadialMap:
    return parse_rdm(Path(path).read_bytes())


# ---------------------------------------------------------------------------
# decoding


def ray_angles(rays: int = RAY_COUNT) -> np.ndarray:
    return np.arange(rays) * (2.0 * np.pi / rays)


def polygon_vertices(poly: StarPolygon) -> tuple[np.ndarray, np.ndarray]:
    theta = ray_angles(len(poly.radii))
    radii = np.asarray(poly.radii, dtype=np.float64)
    return poly.center[0] + radii * np.cos(theta), poly.center[1] + radii * np.sin(theta)


def candidates(m: RadialMap, p: StarParams | None = None) -> list[StarPolygon]:
    """Thresholded lattice pixels as polygons, best score first.

    Ties are broken by raster order of the center. Pixels with any
    zero ray are skipped: they describe an empty polygon.
    """
    p = p or StarParams()
    sel = m.prob >= p.prob_threshold
    sel &= (m.dist > 0.0).all(axis=2)
    if p.grid_step > 1:
        lattice = np.zeros_like(sel)
        lattice[:: p.grid_step, :: p.grid_step] = True
        sel &= lattice
    ys, xs = np.nonzero(sel)
    scores = m.prob[ys, xs]
    order = np.argsort(-scores, kind="stable")  # stable sort keeps raster order in ties
    return [
        StarPolygon(
            center=(xs[i] + 0.5, ys[i] + 0.5),
            radii=m.dist[ys[i], xs[i]].astype(np.float64),
            score=float(scores[i]),
        )
        for i in order
    ]


def _pixel_bbox(poly: StarPolygon, dims: tuple[int, int]) -> tuple[int, int, int, int] | None:
    """Pixel-index bbox (x0, y0, x1, y1) possibly touching the polygon."""
    w, h = dims
    vx, vy = polygon_vertices(poly)
    x0 = max(0, int(np.floor(vx.min() - 0.5)))
    x1 = min(w - 1, int(np.ceil(vx.max() - 0.5)))
    y0 = max(0, int(np.floor(vy.min() - 0.5)))
    y1 = min(h - 1, int(np.ceil(vy.max() - 0.5)))
    if x0 > x1 or y0 > y1:
        return None
    return x0, y0, x1, y1


def _rasterize_local(poly: StarPolygon, bbox: tuple[int, int, int, int]) -> np.ndarray:
    """Even-odd inside test for every pixel center in the bbox."""
    x0, y0, x1, y1 = bbox
    vx, vy = polygon_vertices(poly)
    ex1, ey1 = vx, vy
    ex2, ey2 = np.roll(vx, -1), np.roll(vy, -1)
    xc = (np.arange(x0, x1 + 1) + 0.5)[None, None, :]
    yc = (np.arange(y0, y1 + 1) + 0.5)[None, :, None]
    y1e = ey1[:, None, None]
    y2e = ey2[:, None, None]
    x1e = ex1[:, None, None]
    x2e = ex2[:, None, None]
    spans = ((y1e <= yc) & (yc < y2e)) | ((y2e <= yc) & (yc < y1e))
    denom = y2e - y1e
    denom = np.where(denom == 0.0, 1.0, denom)
    xt = x1e + (yc - y1e) / denom * (x2e - x1e)
    crossings = (spans & (xc < xt)).sum(axis=0)
    return crossings % 2 == 1


def rasterize_polygon(poly: StarPolygon, dims: tuple[int, int]) -> np.ndarray:
    """Full-frame pixel mask of the polygon, clipped to dims (w, h)."""
    w, h = dims
    mask = np.zeros((h, w), dtype=bool)
    bbox = _pixel_bbox(poly, dims)
    if bbox is not None:
        x0, y0, x1, y1 = bbox
        mask[y0 : y1 + 1, x0 : x1 + 1] = _rasterize_local(poly, bbox)
    return mask


def _iou_local(
    a_bbox: tuple[int, int, int, int],
    a_mask: np.ndarray,
    b_bbox: tuple[int, int, int, int],
    b_mask: np.ndarray,
) -> float:
    ax0, ay0, ax1, ay1 = a_bbox
    bx0, by0, bx1, by1 = b_bbox
    ix0, iy0 = max(ax0, bx0), max(ay0, by0)
    ix1, iy1 = min(ax1, bx1), min(ay1, by1)
    inter = 0
    if ix0 <= ix1 and iy0 <= iy1:
        a_win = a_mask[iy0 - ay0 : iy1 - ay0 + 1, ix0 - ax0 : ix1 - ax0 + 1]
        b_win = b_mask[iy0 - by0 : iy1 - by0 + 1, ix0 - bx0 : ix1 - bx0 + 1]
        inter = int(np.count_nonzero(a_win & b_win))
    union = int(np.count_nonzero(a_mask)) + int(np.count_nonzero(b_mask)) - inter
    return inter / union if union else 0.0


def polygon_iou(a: StarPolygon, b: StarPolygon, dims: tuple[int, int]) -> float:
    """Rasterized intersection-over-union; 0 when the union is empty."""
    a_bbox = _pixel_bbox(a, dims)
    b_bbox = _pixel_bbox(b, dims)
    if a_bbox is None or b_bbox is None:
        empty = ((0, 0, 0, 0), np.zeros((1, 1), dtype=bool))
        a_loc = (a_bbox, _rasterize_local(a, a_bbox)) if a_bbox else empty
        b_loc = (b_bbox, _rasterize_local(b, b_bbox)) if b_bbox else empty
        return _iou_local(*a_loc, *b_loc)
    return _iou_local(a_bbox, _rasterize_local(a, a_bbox), b_bbox, _rasterize_local(b, b_bbox))


def nms(
    cands: list[StarPolygon], p: StarParams | None = None, dims: tuple[int, int] | None = None
) -> list[StarPolygon]:
    """Greedy suppression over a score-sorted candidate list.

    Accept the best remaining candidate, discard every candidate whose
    IoU with it reaches the threshold, repeat. Rasters are cached per
    candidate and pairs with disjoint bboxes skip the IoU entirely.
    """
    p = p or StarParams()
    if dims is None:
        raise ParamError("nms needs the image dims for rasterized IoU")
    n = len(cands)
    alive = [True] * n
    bboxes = [_pixel_bbox(c, dims) for c in cands]
    rasters: list[np.ndarray | None] = [None] * n

    def raster(i: int) -> np.ndarray:
        if rasters[i] is None:
            rasters[i] = _rasterize_local(cands[i], bboxes[i])
        return rasters[i]

    accepted: list[StarPolygon] = []
    for i in range(n):
        if not alive[i]:
            continue
        accepted.append(cands[i])
        if bboxes[i] is None:
            continue
        ax0, ay0, ax1, ay1 = bboxes[i]
        for j in range(i + 1, n):
            if not alive[j] or bboxes[j] is None:
                continue
            bx0, by0, bx1, by1 = bboxes[j]
            if bx0 > ax1 or ax0 > bx1 or by0 > ay1 or ay0 > by1:
                continue
            if _iou_local(bboxes[i], raster(i), bboxes[j], raster(j)) >= p.nms_iou:
                alive[j] = False
        rasters[i] = None  # accepted raster is never needed again
    return accepted


def rasterize_instances(polys: list[StarPolygon], dims: tuple[int, int]) -> LabelMap:
    """Paint polygons in order; earlier polygons keep contested pixels."""
    w, h = dims
    labels = np.zeros((h, w), dtype=np.int32)
    for idx, poly in enumerate(polys, start=1):
        bbox = _pixel_bbox(poly, dims)
        if bbox is None:
            continue
        x0, y0, x1, y1 = bbox
        window = labels[y0 : y1 + 1, x0 : x1 + 1]
        sel = _rasterize_local(poly, bbox) & (window == 0)
        window[sel] = idx
    return LabelMap(labels, len(polys))


# ---------------------------------------------------------------------------
# ground-truth encoding


def encode_ground_truth(labels: LabelMap, rays: int = RAY_COUNT) -> RadialMap:
    """Build the map a perfect predictor would emit for a label image.

    For each labeled pixel, each ray distance is the largest unit step
    count whose samples all stay on the pixel's own label, and the
    probability is the pixel's Euclidean distance to the nearest other
    label (or background), normalized per instance to peak at 1.
    """
    lab = labels.labels
    h, w = lab.shape
    prob = np.zeros((h, w), dtype=np.float32)
    dist = np.zeros((h, w, rays), dtype=np.float32)
    ys, xs = np.nonzero(lab > 0)
    if ys.size == 0:
        return RadialMap(w, h, rays, prob, dist)
    own = lab[ys, xs]

    boxes = ndimage.find_objects(lab, max_label=labels.num_labels)
    for i, box in enumerate(boxes, start=1):
        if box is None:
            continue
        region = np.pad(lab[box] == i, 1)
        edt = ndimage.distance_transform_edt(region)
        peak = edt.max()
        window = prob[box]
        inner = region[1:-1, 1:-1]
        window[inner] = (edt[1:-1, 1:-1][inner] / peak).astype(np.float32)

    max_steps = max(w, h)
    for k, theta in enumerate(ray_angles(rays)):
        c, s = np.cos(theta), np.sin(theta)
        reached = np.zeros(ys.size, dtype=np.float32)
        alive = np.ones(ys.size, dtype=bool)
        for step in range(1, max_steps + 1):
            if not alive.any():
                break
            sx = np.rint(xs[alive] + step * c).astype(np.int64)
            sy = np.rint(ys[alive] + step * s).astype(np.int64)
            ok = (sx >= 0) & (sx < w) & (sy >= 0) & (sy < h)
            ok[ok] &= lab[sy[ok], sx[ok]] == own[alive][ok]
            idx = np.nonzero(alive)[0]
            reached[idx[ok]] = step
            alive[idx[~ok]] = False
        dist[ys, xs, k] = reached
    return RadialMap(w, h, rays, prob, dist)


# ---------------------------------------------------------------------------
# full decode


def analyze_star(
    m: RadialMap,
    p: StarParams | None = None,
    exclusion: np.ndarray | None = None,
) -> list[CrystalInstance]:
    """Decode a map into instance records.

    The polygon representation separates overlapping crystals itself,
    so every instance counts exactly one crystal and has no openings.
    Instances overlapping the exclusion mask are dropped.
    """
    p = p or StarParams()
    if exclusion is not None and exclusion.shape != (m.height, m.width):
        raise DimensionMismatchError(
            f"exclusion {exclusion.shape} does not match map {(m.height, m.width)}"
        )
    survivors = nms(candidates(m, p), p, (m.width, m.height))
    labels = rasterize_instances(survivors, (m.width, m.height))
    out: list[CrystalInstance] = []
    boxes = ndimage.find_objects(labels.labels, max_label=labels.num_labels)
    for i, box in enumerate(boxes, start=1):
        if box is None:
            continue
        if exclusion is not None and exclusion[box][labels.labels[box] == i].any():
            continue
        region = labels.labels[box] == i
        ys, xs = np.nonzero(region)
        y0, x0 = box[0].start, box[1].start
        contour = trace_boundary(region)
        out.append(
            CrystalInstance(
                id=len(out) + 1,
                area_px=int(ys.size),
                centroid=(float(xs.mean()) + x0, float(ys.mean()) + y0),
                hole_count=0,
                crystal_count=1,
                boundary=[(x + x0, y + y0) for x, y in contour],
            )
        )
    return out
