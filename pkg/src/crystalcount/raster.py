"""Pixel-level primitives shared by every analysis stage.

Images are 8-bit grayscale held as (H, W) uint8 arrays wrapped in
GrayImage. Binary masks are plain (H, W) bool arrays, label maps are
int32 wrapped in LabelMap. Coordinates are written (x, y) with x across
columns and y down rows; a pixel's center is the integer point (x, y)
for all geometry in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError
from scipy import ndimage

from .errors import CorruptImageError, UnsupportedFormatError

SUPPORTED_FORMATS = ("PNG", "BMP", "TIFF")

OLD_CAMERA_DIMS = (1280, 1024)
NEW_CAMERA_DIMS = (2048, 1536)

FOUR_CONNECTED = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)
EIGHT_CONNECTED = np.ones((3, 3), dtype=bool)

# Moore neighborhood in clockwise order starting west: W NW N NE E SE S SW
_MOORE = ((-1, 0), (-1, -1), (0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1))


@dataclass
class GrayImage:
    """8-bit grayscale raster; pixels[y, x] in [0, 255]."""

    pixels: np.ndarray

    def __post_init__(self) -> None:
        if not isinstance(self.pixels, np.ndarray) or self.pixels.ndim != 2:
            raise ValueError("pixels must be a 2-D array")
        if self.pixels.dtype != np.uint8:
            raise ValueError("pixels must be uint8")
        if self.pixels.size == 0:
            raise ValueError("image must contain at least one pixel")

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.pixels.shape[0], self.pixels.shape[1])


@dataclass
class LabelMap:
    """Connected-component labels; 0 is background and every label in
    1..num_labels occurs at least once."""

    labels: np.ndarray
    num_labels: int

    def __post_init__(self) -> None:
        if self.labels.ndim != 2:
            raise ValueError("labels must be a 2-D array")
        self.labels = self.labels.astype(np.int32, copy=False)
        if self.num_labels < 0:
            raise ValueError("num_labels must be non-negative")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.labels.shape[0], self.labels.shape[1])


@dataclass(frozen=True)
class CameraProfile:
    """Capture geometry of one of the two supported microscope cameras."""

    name: str
    width: int
    height: int
    um_per_px: float

    def __post_init__(self) -> None:
        expected = {"old": OLD_CAMERA_DIMS, "new": NEW_CAMERA_DIMS}.get(self.name)
        if expected is None:
            raise ValueError(f"unknown camera profile {self.name!r}")
        if (self.width, self.height) != expected:
            raise ValueError(f"camera {self.name!r} is {expected[0]}x{expected[1]}")
        if not self.um_per_px > 0:
            raise ValueError("um_per_px must be positive")

    @classmethod
    def old(cls, um_per_px: float) -> "CameraProfile":
        return cls("old", *OLD_CAMERA_DIMS, um_per_px)

    @classmethod
    def new(cls, um_per_px: float) -> "CameraProfile":
        return cls("new", *NEW_CAMERA_DIMS, um_per_px)


def load_image(path: str | Path) -> GrayImage:
    """Load a PNG/BMP/TIFF file as 8-bit grayscale.

    Color inputs are reduced to luma with integer BT.601 weights,
    rounding half up: (299 R + 587 G + 114 B + 500) // 1000.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(str(path))
    return image_from_bytes(path.read_bytes())


def image_from_bytes(data: bytes) -> GrayImage:
    """Decode raster bytes to grayscale; see load_image."""
    import io

    try:
        with Image.open(io.BytesIO(data)) as im:
            return _to_gray(im)
    except UnidentifiedImageError as exc:
        raise UnsupportedFormatError("not a supported raster format") from exc
    except OSError as exc:
        raise CorruptImageError(f"could not decode image: {exc}") from exc


def _to_gray(im: Image.Image) -> GrayImage:
    if im.format is not None and im.format not in SUPPORTED_FORMATS:
        raise UnsupportedFormatError(f"unsupported format {im.format}")
    if im.mode == "P":
        im = im.convert("RGBA" if "transparency" in im.info else "RGB")
    if im.mode == "L":
        px = np.asarray(im, dtype=np.uint8)
    elif im.mode == "LA":
        px = np.asarray(im)[:, :, 0].astype(np.uint8)
    elif im.mode in ("RGB", "RGBA"):
        rgb = np.asarray(im)[:, :, :3].astype(np.uint32)
        luma = 299 * rgb[..., 0] + 587 * rgb[..., 1] + 114 * rgb[..., 2]
        px = ((luma + 500) // 1000).astype(np.uint8)
    else:
        raise UnsupportedFormatError(f"unsupported pixel mode {im.mode!r}")
    return GrayImage(np.ascontiguousarray(px))


def dim_bright_pixels(img: GrayImage, quantile: float = 0.2, factor: float = 0.2) -> GrayImage:
    """Dim the brightest pixels of the image.

    The cut t is a nearest-rank quantile of the sorted intensity buffer:
    with k = floor(quantile * N) pixels to dim, t = sorted[N - k]
    (clamped to the last entry), and every pixel with value >= t becomes
    floor((1 - factor) * v + 0.5). Ties at the cut are all dimmed;
    pixels below the cut are untouched.
    """
    if not 0.0 < quantile < 1.0:
        raise ValueError("quantile must be in (0, 1)")
    if not 0.0 <= factor < 1.0:
        raise ValueError("factor must be in [0, 1)")
    px = img.pixels
    flat = np.sort(px, axis=None)
    k = int(quantile * flat.size)
    t = flat[min(flat.size - 1, flat.size - k)]
    dimmed = np.floor(px * (1.0 - factor) + 0.5).astype(np.uint8)
    return GrayImage(np.where(px >= t, dimmed, px))


def box_sum(arr: np.ndarray, k: int, replicate: bool = False) -> np.ndarray:
    """Sum of each k x k window via an integral image, exact in int64.

    Out-of-image cells replicate the nearest edge value when replicate
    is set and count as zero otherwise.
    """
    r = k // 2
    padded = np.pad(arr.astype(np.int64), r, mode="edge" if replicate else "constant")
    ii = np.zeros((padded.shape[0] + 1, padded.shape[1] + 1), dtype=np.int64)
    ii[1:, 1:] = padded.cumsum(axis=0).cumsum(axis=1)
    return ii[k:, k:] - ii[:-k, k:] - ii[k:, :-k] + ii[:-k, :-k]


def adaptive_threshold(img: GrayImage, block: int, offset: float) -> np.ndarray:
    """Mark pixels darker than their neighborhood mean by more than offset.

    A pixel is foreground iff v < mean(block x block window, border
    replicated) - offset. The comparison is carried out on integer
    window sums, so adding a constant to every pixel can never flip the
    result.
    """
    if block < 3 or block % 2 == 0:
        raise ValueError("block must be odd and >= 3")
    n = block * block
    sums = box_sum(img.pixels, block, replicate=True)
    return img.pixels.astype(np.int64) * n < sums - offset * n


def canny_edges(img: GrayImage, low: float, high: float) -> np.ndarray:
    """Edge mask from the standard Canny chain on the raw image."""
    return canny_field(img.pixels.astype(np.float32), low, high)


def canny_field(field: np.ndarray, low: float, high: float) -> np.ndarray:
    """Canny on a float intensity field.

    3x3 Sobel gradients, non-maximum suppression along the gradient
    direction quantized to four sectors, then double-threshold
    hysteresis where weak edges survive only when 8-connected to a
    strong edge. On gradient plateaus the pixel first in scan direction
    wins, keeping edges one pixel wide.
    """
    if not 0 <= low <= high:
        raise ValueError("thresholds must satisfy 0 <= low <= high")
    p = np.pad(field.astype(np.float32, copy=False), 1, mode="edge")
    gx = (p[:-2, 2:] + 2 * p[1:-1, 2:] + p[2:, 2:]) - (
        p[:-2, :-2] + 2 * p[1:-1, :-2] + p[2:, :-2]
    )
    gy = (p[2:, :-2] + 2 * p[2:, 1:-1] + p[2:, 2:]) - (
        p[:-2, :-2] + 2 * p[:-2, 1:-1] + p[:-2, 2:]
    )
    mag = np.hypot(gx, gy)
    theta = np.arctan2(gy, gx)
    theta = np.where(theta < 0, theta + np.pi, theta)
    sector = np.rint(theta / (np.pi / 4)).astype(np.int8) % 4

    h, w = mag.shape
    m = np.pad(mag, 1, mode="constant")
    fwd = np.zeros_like(mag)
    bwd = np.zeros_like(mag)
    # neighbor offsets along the gradient for sectors E, SE, S, SW
    for s, (dy, dx) in enumerate(((0, 1), (1, 1), (1, 0), (1, -1))):
        sel = sector == s
        fwd[sel] = m[1 + dy : 1 + dy + h, 1 + dx : 1 + dx + w][sel]
        bwd[sel] = m[1 - dy : 1 - dy + h, 1 - dx : 1 - dx + w][sel]
    nms = np.where((mag > bwd) & (mag >= fwd), mag, 0.0)

    strong = nms > high
    if not strong.any():
        return np.zeros(mag.shape, dtype=bool)
    weak = nms > low
    lab, n = ndimage.label(weak, structure=EIGHT_CONNECTED)
    keep = np.zeros(n + 1, dtype=bool)
    keep[np.unique(lab[strong])] = True
    keep[0] = False
    return keep[lab]


def morph(mask: np.ndarray, op: str, k: int) -> np.ndarray:
    """Apply a k x k square erosion/dilation/opening/closing.

    Cells outside the mask count as background for both erosion and
    dilation.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError("kernel must be odd and >= 1")
    if op not in ("erode", "dilate", "open", "close"):
        raise ValueError(f"unknown morphology op {op!r}")
    if k == 1:
        return mask.copy()
    if op == "erode":
        return _erode(mask, k)
    if op == "dilate":
        return _dilate(mask, k)
    if op == "open":
        return _dilate(_erode(mask, k), k)
    return _erode(_dilate(mask, k), k)


def _erode(mask: np.ndarray, k: int) -> np.ndarray:
    return box_sum(mask, k) == k * k


def _dilate(mask: np.ndarray, k: int) -> np.ndarray:
    return box_sum(mask, k) > 0


def flood_background(edges: np.ndarray) -> np.ndarray:
    """Flood 4-connected over non-edge pixels from every border
    non-edge pixel; returns everything the flood cannot reach, i.e. the
    edges plus any enclosed interiors."""
    open_px = ~edges
    lab, n = ndimage.label(open_px, structure=FOUR_CONNECTED)
    if n == 0:
        return np.ones_like(edges)
    border = np.concatenate([lab[0, :], lab[-1, :], lab[:, 0], lab[:, -1]])
    reached = np.zeros(n + 1, dtype=bool)
    reached[np.unique(border)] = True
    reached[0] = False
    return ~reached[lab]


def connected_components(mask: np.ndarray, connectivity: int = 8) -> LabelMap:
    """Label foreground components, numbered 1..n by raster order of
    each component's first pixel."""
    if connectivity not in (4, 8):
        raise ValueError("connectivity must be 4 or 8")
    structure = EIGHT_CONNECTED if connectivity == 8 else FOUR_CONNECTED
    raw, n = ndimage.label(mask, structure=structure)
    if n == 0:
        return LabelMap(raw.astype(np.int32), 0)
    flat = raw.ravel()
    nz = np.nonzero(flat)[0]
    uniq, first = np.unique(flat[nz], return_index=True)
    order = np.argsort(nz[first], kind="stable")
    remap = np.zeros(n + 1, dtype=np.int32)
    remap[uniq[order]] = np.arange(1, n + 1, dtype=np.int32)
    return LabelMap(remap[raw], n)


def count_holes(region: np.ndarray) -> int:
    """Count enclosed background pockets of a region mask.

    A hole is a 4-connected background component inside the region's
    1-padded bounding box that does not touch the pad border.
    """
    ys, xs = np.nonzero(region)
    if ys.size == 0:
        return 0
    sub = region[ys.min() : ys.max() + 1, xs.min() : xs.max() + 1]
    padded = np.pad(sub, 1, constant_values=False)
    lab, n = ndimage.label(~padded, structure=FOUR_CONNECTED)
    border = np.concatenate([lab[0, :], lab[-1, :], lab[:, 0], lab[:, -1]])
    touching = np.unique(border)
    return int(n - np.count_nonzero(touching > 0))


def convex_hull(points: np.ndarray) -> np.ndarray:
    """Convex hull of 2-D points by monotone chain, counterclockwise.

    Collinear input collapses to its two extreme points.
    """
    pts = sorted(set((float(p[0]), float(p[1])) for p in points))
    if len(pts) <= 2:
        return np.array(pts, dtype=np.float64).reshape(-1, 2)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return np.array(lower[:-1] + upper[:-1], dtype=np.float64)


def convex_hull_area(region: np.ndarray) -> float:
    """Area of the convex hull of the region's pixel centers.

    Shoelace over the monotone-chain hull; fewer than three distinct
    hull points, or a collinear region, gives 0.
    """
    ys, xs = np.nonzero(region)
    if ys.size < 3:
        return 0.0
    # only each row's leftmost and rightmost pixel can be a hull vertex
    order = np.lexsort((xs, ys))
    sy, sx = ys[order], xs[order]
    _, first = np.unique(sy, return_index=True)
    last = np.r_[first[1:], sy.size] - 1
    idx = np.union1d(first, last)
    pts = np.stack([sx[idx], sy[idx]], axis=1)
    hull = convex_hull(pts)
    if hull.shape[0] < 3:
        return 0.0
    x, y = hull[:, 0], hull[:, 1]
    return float(abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))) / 2.0)


def trace_boundary(region: np.ndarray) -> list[tuple[int, int]]:
    """Ordered outer boundary of an 8-connected region as (x, y) pixel
    coordinates (Moore neighbor tracing, clockwise). Thin arms are
    visited twice, once per side, which keeps the walk a closed loop.
    """
    ys, xs = np.nonzero(region)
    if ys.size == 0:
        return []
    # nonzero scans rows first, so (xs[0], ys[0]) is the first pixel in
    # raster order and its west neighbor is guaranteed background
    start = (int(xs[0]), int(ys[0]))
    if ys.size == 1:
        return [start]
    h, w = region.shape

    def is_fg(x: int, y: int) -> bool:
        return 0 <= x < w and 0 <= y < h and bool(region[y, x])

    contour = [start]
    cur = start
    back = (start[0] - 1, start[1])
    first_move: tuple[int, int] | None = None
    max_steps = 8 * ys.size + 8
    for _ in range(max_steps):
        i = _MOORE.index((back[0] - cur[0], back[1] - cur[1]))
        nxt = None
        for j in range(1, 9):
            ox, oy = _MOORE[(i + j) % 8]
            cand = (cur[0] + ox, cur[1] + oy)
            if is_fg(*cand):
                nxt = cand
                prev_ox, prev_oy = _MOORE[(i + j - 1) % 8]
                back = (cur[0] + prev_ox, cur[1] + prev_oy)
                break
        if nxt is None:
            break  # isolated pixel, handled above, defensive only
        if cur == start:
            # stop once the first directed move out of start repeats
            if first_move is None:
                first_move = nxt
            elif nxt == first_move:
                break
        contour.append(nxt)
        cur = nxt
    if len(contour) > 1 and contour[-1] == contour[0]:
        contour.pop()
    return contour


def polygon_perimeter(points: list[tuple[int, int]]) -> float:
    """Length of the closed polyline through the given points."""
    if len(points) < 2:
        return 0.0
    arr = np.asarray(points, dtype=np.float64)
    d = np.diff(np.vstack([arr, arr[:1]]), axis=0)
    return float(np.hypot(d[:, 0], d[:, 1]).sum())
