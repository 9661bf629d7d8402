"""Operator-facing metrics computed from counted instances.

Sizes are reported as equivalent circular diameters: the diameter of the
disk whose pixel area matches the instance's, converted to micrometers
through the camera calibration. Per-area figures are normalized by the
analyzed area, i.e. the image minus the excluded (bubble) pixels.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .classical import CrystalInstance
from .errors import DimensionMismatchError, ParamError

DEFAULT_HISTOGRAM_BINS = 10


@dataclass(frozen=True)
class Calibration:
    """Pixel pitch of the optics, in micrometers per pixel."""

    um_per_px: float = 1.0

    def __post_init__(self) -> None:
        if not isinstance(self.um_per_px, (int, float)) or isinstance(self.um_per_px, bool):
            raise ParamError("um_per_px must be a number")
        if not math.isfinite(self.um_per_px) or self.um_per_px <= 0:
            raise ParamError("um_per_px must be positive and finite")


@dataclass(frozen=True)
class SizeHistogram:
    """Size distribution; edges has one more entry than counts.

    Both are empty when there are no instances.
    """

    edges_um: tuple[float, ...]
    counts: tuple[int, ...]


@dataclass(frozen=True)
class AnalysisResult:
    """The metrics shown to the operator for one image.

    crystals_per_mm2 and coverage_percent are None when the exclusion
    covers the whole image; there is no area left to normalize by.
    """

    file_name: str
    model: str
    seed_count: int
    crystals_per_mm2: float | None
    mean_size_um: float
    coverage_percent: float | None
    analyzed_area_mm2: float
    bubble_area_fraction: float
    histogram: SizeHistogram


def equivalent_diameter_um(area_px: int, um_per_px: float) -> float:
    """Diameter of the disk with the same area, in micrometers."""
    return 2.0 * math.sqrt(area_px / math.pi) * um_per_px


def size_histogram(
    diameters_um: Sequence[float], bins: int = DEFAULT_HISTOGRAM_BINS
) -> SizeHistogram:
    """Bin diameters into equal-width bins spanning [0, max diameter].

    The top edge is closed so the largest instance lands in the last
    bin. All-equal diameters collapse to a single bin; an empty input
    yields an empty histogram.
    """
    if not isinstance(bins, int) or isinstance(bins, bool) or bins < 1:
        raise ParamError("bins must be a positive integer")
    values = [float(v) for v in diameters_um]
    if not values:
        return SizeHistogram((), ())
    top = max(values)
    if all(v == top for v in values):
        return SizeHistogram((0.0, top), (len(values),))
    counts, edges = np.histogram(values, bins=bins, range=(0.0, top))
    return SizeHistogram(
        tuple(float(e) for e in edges), tuple(int(c) for c in counts)
    )


def compute_result(
    instances: Sequence[CrystalInstance],
    exclusion: np.ndarray | None,
    dims: tuple[int, int],
    cal: Calibration,
    file_name: str,
    model: str,
    *,
    bins: int = DEFAULT_HISTOGRAM_BINS,
) -> AnalysisResult:
    """Aggregate instances into the operator-facing result.

    dims is (width, height) of the analyzed image; exclusion, when
    given, is a boolean mask of pixels withheld from the analysis.
    """
    if model not in ("A", "B"):
        raise ParamError(f"unknown model {model!r}")
    width, height = dims
    if width < 1 or height < 1:
        raise ParamError("dims must be positive")
    total_px = width * height
    if exclusion is None:
        excluded_px = 0
    else:
        if exclusion.shape != (height, width):
            raise DimensionMismatchError(
                f"exclusion shape {exclusion.shape} does not match dims {dims}"
            )
        excluded_px = int(np.count_nonzero(exclusion))

    analyzed_px = total_px - excluded_px
    mm_per_px = cal.um_per_px / 1000.0
    analyzed_area_mm2 = analyzed_px * mm_per_px * mm_per_px

    seed_count = sum(inst.crystal_count for inst in instances)
    diameters = [
        equivalent_diameter_um(inst.area_px, cal.um_per_px) for inst in instances
    ]
    mean_size_um = sum(diameters) / len(diameters) if diameters else 0.0
    covered_px = sum(inst.area_px for inst in instances)

    if analyzed_px > 0:
        coverage_percent: float | None = 100.0 * covered_px / analyzed_px
        crystals_per_mm2: float | None = seed_count / analyzed_area_mm2
    else:
        coverage_percent = None
        crystals_per_mm2 = None

    return AnalysisResult(
        file_name=file_name,
        model=model,
        seed_count=seed_count,
        crystals_per_mm2=crystals_per_mm2,
        mean_size_um=mean_size_um,
        coverage_percent=coverage_percent,
        analyzed_area_mm2=analyzed_area_mm2,
        bubble_area_fraction=excluded_px / total_px,
        histogram=size_histogram(diameters, bins),
    )
