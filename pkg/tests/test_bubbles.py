"""Tests for artifact detection and exclusion masking."""

import math

import numpy as np
import pytest

from crystalcount import bubbles as bub
from crystalcount import classical, synth
from crystalcount.bubbles import BubbleParams, BubbleRegion
from crystalcount.errors import ParamError
from crystalcount.raster import GrayImage


def gray(arr) -> GrayImage:
    return GrayImage(np.asarray(arr, dtype=np.uint8))


def paint_disk(px: np.ndarray, cx, cy, r, value) -> None:
    yy, xx = np.mgrid[0 : px.shape[0], 0 : px.shape[1]]
    px[(xx - cx) ** 2 + (yy - cy) ** 2 <= r * r] = value


def brute_min_circle(points):
    """Smallest of all 2-point and 3-point candidate circles covering all."""

    def covers(c):
        return c is not None and all(
            math.hypot(p[0] - c[0], p[1] - c[1]) <= c[2] + 1e-9 for p in points
        )

    best = None
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            c = bub._circle_two(points[i], points[j])
            if covers(c) and (best is None or c[2] < best[2]):
                best = c
            for k in range(j + 1, n):
                c = bub._circumcircle(points[i], points[j], points[k])
                if covers(c) and (best is None or c[2] < best[2]):
                    best = c
    return best


# ---------------------------------------------------------------------------
# minimum enclosing circle


def test_circle_single_point():
    cx, cy, r = bub.min_enclosing_circle([(3.0, 4.0)])
    assert (cx, cy, r) == (3.0, 4.0, 0.0)


def test_circle_two_points():
    cx, cy, r = bub.min_enclosing_circle([(0, 0), (10, 0)])
    assert (cx, cy) == pytest.approx((5.0, 0.0))
    assert r == pytest.approx(5.0)


def test_circle_square_corners():
    cx, cy, r = bub.min_enclosing_circle([(0, 0), (10, 0), (0, 10), (10, 10)])
    assert (cx, cy) == pytest.approx((5.0, 5.0))
    assert r == pytest.approx(math.sqrt(50.0))


def test_circle_collinear():
    cx, cy, r = bub.min_enclosing_circle([(0, 0), (4, 0), (10, 0)])
    assert (cx, cy) == pytest.approx((5.0, 0.0))
    assert r == pytest.approx(5.0)


def test_circle_interior_points_ignored():
    pts = [(0, 0), (10, 0), (5, 5), (5, 1), (2, 2)]
    cx, cy, r = bub.min_enclosing_circle(pts)
    for p in pts:
        assert math.hypot(p[0] - cx, p[1] - cy) <= r + 1e-9


def test_circle_matches_brute_force():
    rng = np.random.default_rng(71)
    for _ in range(25):
        pts = [tuple(q) for q in rng.uniform(-20, 20, size=(rng.integers(2, 9), 2))]
        got = bub.min_enclosing_circle(pts)
        expect = brute_min_circle(pts)
        assert got[2] == pytest.approx(expect[2], rel=1e-6, abs=1e-9)
        for p in pts:
            assert math.hypot(p[0] - got[0], p[1] - got[1]) <= got[2] + 1e-6


# ---------------------------------------------------------------------------
# params


@pytest.mark.parametrize(
    "kwargs",
    [{"min_circularity": 0.0}, {"min_circularity": 1.2}, {"margin": -1}, {"min_equiv_diameter": -5}],
)
def test_bubble_params_validation(kwargs):
    with pytest.raises(ParamError):
        BubbleParams(**kwargs)


# ---------------------------------------------------------------------------
# detection


def test_detect_blank_image():
    assert bub.detect_bubbles(gray(np.full((96, 96), 200))) == []


def test_detect_single_disk():
    px = np.full((128, 128), 200, np.uint8)
    paint_disk(px, 60, 60, 50, 90)
    regions = bub.detect_bubbles(gray(px))
    assert len(regions) == 1
    r = regions[0]
    assert r.circularity >= 0.9
    assert r.circularity <= 1.05
    assert r.radius == pytest.approx(50.0, abs=2.0)
    assert r.center[0] == pytest.approx(60.0, abs=1.5)
    assert r.center[1] == pytest.approx(60.0, abs=1.5)
    assert r.area_px == pytest.approx(math.pi * 50**2, rel=0.03)


def test_detect_small_disk_rejected():
    px = np.full((128, 128), 200, np.uint8)
    paint_disk(px, 64, 64, 15, 90)
    assert bub.detect_bubbles(gray(px)) == []


def test_detect_rectangle_rejected_by_circularity():
    px = np.full((200, 240), 200, np.uint8)
    px[60:130, 40:180] = 90  # 140x70: passes the size gate, fails roundness
    params = BubbleParams()
    area = 70 * 140
    assert 2 * math.sqrt(area / math.pi) >= params.min_equiv_diameter
    assert bub.detect_bubbles(gray(px), params) == []


def test_detect_two_disks_raster_order():
    px = np.full((160, 300), 200, np.uint8)
    paint_disk(px, 220, 80, 50, 90)
    paint_disk(px, 60, 80, 40, 90)
    regions = bub.detect_bubbles(gray(px))
    assert len(regions) == 2
    # components are numbered by first raster pixel; the taller disk tops out first
    assert regions[0].center[0] == pytest.approx(220.0, abs=1.5)
    assert regions[1].center[0] == pytest.approx(60.0, abs=1.5)


# ---------------------------------------------------------------------------
# exclusion mask


def test_exclusion_empty():
    assert not bub.exclusion_mask([], (64, 48)).any()
    assert bub.exclusion_mask([], (64, 48)).shape == (48, 64)


def test_exclusion_single_circle_exact():
    region = BubbleRegion(center=(50.0, 50.0), radius=10.0, area_px=314, circularity=0.95)
    mask = bub.exclusion_mask([region], (100, 100), margin=5.0)
    yy, xx = np.mgrid[0:100, 0:100]
    expect = (xx - 50.0) ** 2 + (yy - 50.0) ** 2 <= 15.0**2
    assert (mask == expect).all()


def test_exclusion_union_overlapping():
    a = BubbleRegion(center=(40.0, 50.0), radius=12.0, area_px=0, circularity=1.0)
    b = BubbleRegion(center=(55.0, 50.0), radius=12.0, area_px=0, circularity=1.0)
    both = bub.exclusion_mask([a, b], (100, 100), margin=0.0)
    only_a = bub.exclusion_mask([a], (100, 100), margin=0.0)
    only_b = bub.exclusion_mask([b], (100, 100), margin=0.0)
    assert both.sum() < only_a.sum() + only_b.sum()
    assert (both == (only_a | only_b)).all()


def test_exclusion_monotone_in_margin():
    region = BubbleRegion(center=(30.0, 40.0), radius=8.0, area_px=0, circularity=1.0)
    small = bub.exclusion_mask([region], (80, 80), margin=0.0)
    mid = bub.exclusion_mask([region], (80, 80), margin=3.0)
    big = bub.exclusion_mask([region], (80, 80), margin=7.0)
    assert (small <= mid).all()
    assert (mid <= big).all()
    with pytest.raises(ParamError):
        bub.exclusion_mask([region], (80, 80), margin=-1.0)


def test_exclusion_clipped_at_borders():
    region = BubbleRegion(center=(2.0, 2.0), radius=10.0, area_px=0, circularity=1.0)
    mask = bub.exclusion_mask([region], (40, 40), margin=0.0)
    assert mask[0, 0]
    assert mask.shape == (40, 40)


# ---------------------------------------------------------------------------
# phantom integration


def test_phantom_bubbles_found_and_rings_spared():
    img, truth = synth.ring_phantom(768, 768, 8, 2, seed=21)
    regions = bub.detect_bubbles(img)
    assert len(regions) == 2
    for got in regions:
        match = min(
            truth.bubbles, key=lambda b: math.hypot(b.cx - got.center[0], b.cy - got.center[1])
        )
        assert math.hypot(match.cx - got.center[0], match.cy - got.center[1]) < 3.0
        assert got.radius == pytest.approx(match.r, abs=2.5)


def test_model_a_flow_counts_rings_only():
    img, truth = synth.ring_phantom(768, 768, 8, 2, seed=21)
    regions = bub.detect_bubbles(img)
    excl = bub.exclusion_mask(regions, (768, 768), margin=5.0)
    inst = classical.analyze_classical(img, exclusion=excl)
    assert len(inst) == 8


def test_added_bubble_never_raises_count():
    img, truth = synth.ring_phantom(512, 512, 8, 0, seed=33)
    base = len(classical.analyze_classical(img))
    assert base == 8

    # place a bubble at the grid point farthest from every ring
    best, best_d = None, -1.0
    for y in range(60, 452, 8):
        for x in range(60, 452, 8):
            d = min(math.hypot(x - s.cx, y - s.cy) for s in truth.rings)
            if d > best_d:
                best, best_d = (x, y), d
    assert best_d >= 85.0
    px = img.pixels.copy()
    paint_disk(px, best[0], best[1], 32, 90)
    img2 = GrayImage(px)

    regions = bub.detect_bubbles(img2)
    assert len(regions) == 1
    excl = bub.exclusion_mask(regions, (512, 512), margin=5.0)
    assert len(classical.analyze_classical(img2, exclusion=excl)) <= base
