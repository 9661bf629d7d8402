"""Metric aggregation: sizes, per-area figures, histogram."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystalcount.classical import CrystalInstance
from crystalcount.errors import DimensionMismatchError, ParamError
from crystalcount.stats import (
    AnalysisResult,
    Calibration,
    SizeHistogram,
    compute_result,
    equivalent_diameter_um,
    size_histogram,
)


def inst(id_, area, crystal_count=1, hole_count=0):
    return CrystalInstance(
        id=id_,
        area_px=area,
        centroid=(0.0, 0.0),
        hole_count=hole_count,
        crystal_count=crystal_count,
        boundary=[(0, 0)],
    )


# --- calibration and argument validation ---


@pytest.mark.parametrize("bad", [0.0, -1.0, float("nan"), float("inf"), "1.0", True])
def test_calibration_rejects_nonpositive(bad):
    with pytest.raises(ParamError):
        Calibration(bad)


def test_calibration_default_is_identity():
    assert Calibration().um_per_px == 1.0


def test_compute_rejects_bad_model():
    with pytest.raises(ParamError):
        compute_result([], None, (10, 10), Calibration(), "x.png", "C")


def test_compute_rejects_empty_dims():
    with pytest.raises(ParamError):
        compute_result([], None, (0, 10), Calibration(), "x.png", "A")


def test_compute_rejects_mismatched_exclusion():
    mask = np.zeros((5, 5), dtype=bool)
    with pytest.raises(DimensionMismatchError):
        compute_result([], mask, (10, 10), Calibration(), "x.png", "A")


def test_histogram_rejects_bad_bins():
    with pytest.raises(ParamError):
        size_histogram([1.0], bins=0)


# --- equivalent diameter ---


def test_equivalent_diameter_unit_disk():
    # area pi -> diameter 2, scaled by the calibration
    assert equivalent_diameter_um(math.pi, 1.0) == pytest.approx(2.0, rel=1e-12)
    assert equivalent_diameter_um(math.pi, 2.5) == pytest.approx(5.0, rel=1e-12)


# --- the empty result ---


def test_no_instances_no_exclusion():
    r = compute_result([], None, (100, 50), Calibration(), "a.png", "A")
    assert r.seed_count == 0
    assert r.mean_size_um == 0.0
    assert r.coverage_percent == 0.0
    assert r.crystals_per_mm2 == 0.0
    assert r.bubble_area_fraction == 0.0
    assert r.histogram == SizeHistogram((), ())
    assert r.file_name == "a.png"
    assert r.model == "A"


# --- the worked example: one 100 px^2 instance in a 1 mm^2 field ---


def test_single_instance_reference_values():
    r = compute_result(
        [inst(1, 100)], None, (1000, 1000), Calibration(1.0), "ref.png", "A"
    )
    # independent arithmetic: d = 2 sqrt(A / pi), field = 10^6 px = 1 mm^2
    assert r.mean_size_um == pytest.approx(2.0 * math.sqrt(100.0 / math.pi), rel=1e-12)
    assert round(r.mean_size_um, 2) == 11.28
    assert r.coverage_percent == pytest.approx(0.01, rel=1e-12)
    assert r.crystals_per_mm2 == pytest.approx(1.0, rel=1e-12)
    assert r.analyzed_area_mm2 == pytest.approx(1.0, rel=1e-12)
    assert r.seed_count == 1


# --- seed counting ---


def test_seed_count_sums_crystal_counts():
    instances = [inst(1, 30), inst(2, 40, crystal_count=3, hole_count=3), inst(3, 25)]
    r = compute_result(instances, None, (200, 200), Calibration(), "s.png", "A")
    assert r.seed_count == 5


# --- exclusion accounting ---


def test_exclusion_shrinks_analyzed_area():
    mask = np.zeros((100, 200), dtype=bool)
    mask[:50, :] = True  # half the image
    r = compute_result([inst(1, 100)], mask, (200, 100), Calibration(2.0), "e.png", "A")
    analyzed_px = 200 * 100 - 50 * 200
    assert r.bubble_area_fraction == pytest.approx(0.5)
    assert r.analyzed_area_mm2 == pytest.approx(analyzed_px * (2.0 / 1000.0) ** 2)
    assert r.coverage_percent == pytest.approx(100.0 * 100 / analyzed_px)
    assert r.crystals_per_mm2 == pytest.approx(1 / r.analyzed_area_mm2)


def test_full_exclusion_blanks_per_area_fields():
    mask = np.ones((20, 30), dtype=bool)
    r = compute_result(
        [inst(1, 10, crystal_count=2, hole_count=2)],
        mask,
        (30, 20),
        Calibration(),
        "f.png",
        "B",
    )
    assert r.coverage_percent is None
    assert r.crystals_per_mm2 is None
    assert r.analyzed_area_mm2 == 0.0
    assert r.bubble_area_fraction == 1.0
    # the count itself still stands
    assert r.seed_count == 2
    assert r.histogram.counts == (1,)


# --- histogram ---


def test_histogram_empty():
    assert size_histogram([]) == SizeHistogram((), ())


def test_histogram_all_equal_collapses_to_one_bin():
    h = size_histogram([7.0, 7.0, 7.0, 7.0])
    assert h.edges_um == (0.0, 7.0)
    assert h.counts == (4,)


def test_histogram_single_value_is_degenerate():
    h = size_histogram([3.5])
    assert h.edges_um == (0.0, 3.5)
    assert h.counts == (1,)


def test_histogram_bins_and_edges():
    # top = 10 -> bin width 1; values picked strictly inside their bins,
    # except the max which the closed top edge must keep in the last bin
    values = [0.5, 3.14, 3.9, 9.99, 10.0]
    h = size_histogram(values)
    assert h.edges_um == tuple(float(k) for k in range(11))
    expected = [0] * 10
    for v in values:
        expected[min(9, int(v // 1.0))] += 1
    assert h.counts == tuple(expected)
    assert sum(h.counts) == len(values)


def test_histogram_custom_bin_count():
    # bins are half-open on the left, so 2.0 belongs to the upper bin
    h = size_histogram([1.0, 2.0, 4.0], bins=2)
    assert h.edges_um == (0.0, 2.0, 4.0)
    assert h.counts == (1, 2)


@given(
    st.lists(
        st.floats(min_value=0.01, max_value=500.0, allow_nan=False),
        min_size=1,
        max_size=40,
    )
)
def test_histogram_counts_sum_to_input_size(values):
    h = size_histogram(values)
    assert sum(h.counts) == len(values)
    assert len(h.edges_um) == len(h.counts) + 1
    assert h.edges_um[0] == 0.0
    assert h.edges_um[-1] == pytest.approx(max(values))


# --- calibration scaling law ---


@settings(max_examples=60)
@given(
    st.lists(
        st.tuples(st.integers(1, 5000), st.integers(1, 4)), min_size=0, max_size=25
    ),
    st.sampled_from([0.5, 2.0, 3.7]),
    st.floats(min_value=0.05, max_value=20.0, allow_nan=False),
)
def test_calibration_scaling_law(spec, s, base_um):
    instances = [inst(i + 1, a, crystal_count=c, hole_count=c) for i, (a, c) in enumerate(spec)]
    r1 = compute_result(instances, None, (500, 400), Calibration(base_um), "u.png", "A")
    r2 = compute_result(
        instances, None, (500, 400), Calibration(s * base_um), "u.png", "A"
    )
    assert r2.seed_count == r1.seed_count
    assert r2.coverage_percent == r1.coverage_percent  # bit-identical
    if instances:
        assert r2.mean_size_um == pytest.approx(s * r1.mean_size_um, rel=1e-9)
    else:
        assert r2.mean_size_um == r1.mean_size_um == 0.0
    assert r2.crystals_per_mm2 == pytest.approx(r1.crystals_per_mm2 / (s * s), rel=1e-9)


# --- coverage bounds and monotonicity ---


def test_coverage_capped_for_disjoint_instances():
    # disjoint regions can cover at most the analyzed area
    instances = [inst(1, 5000), inst(2, 5000)]
    r = compute_result(instances, None, (100, 100), Calibration(), "c.png", "A")
    assert r.coverage_percent == 100.0


@given(
    st.lists(
        st.tuples(st.integers(1, 300), st.integers(1, 4)), min_size=1, max_size=15
    ),
    st.integers(0, 14),
)
def test_removing_an_instance_never_raises_metrics(spec, drop_at):
    instances = [inst(i + 1, a, crystal_count=c, hole_count=c) for i, (a, c) in enumerate(spec)]
    fewer = list(instances)
    del fewer[drop_at % len(fewer)]
    full = compute_result(instances, None, (300, 300), Calibration(), "m.png", "A")
    part = compute_result(fewer, None, (300, 300), Calibration(), "m.png", "A")
    assert part.seed_count <= full.seed_count
    assert part.coverage_percent <= full.coverage_percent
    assert sum(part.histogram.counts) <= sum(full.histogram.counts)


def test_result_is_plain_data():
    r = compute_result([inst(1, 9)], None, (10, 10), Calibration(), "d.png", "A")
    assert isinstance(r, AnalysisResult)
    assert isinstance(r.histogram.edges_um, tuple)
    assert isinstance(r.histogram.counts, tuple)
