"""Tests for the standard-resolution counting pipeline."""

import math

import numpy as np
import pytest

from crystalcount import classical, synth
from crystalcount.classical import ClassicalParams
from crystalcount.errors import DimensionMismatchError, ImageTooSmallError, ParamError
from crystalcount.raster import GrayImage, LabelMap, connected_components

P = ClassicalParams()


def gray(arr) -> GrayImage:
    return GrayImage(np.asarray(arr, dtype=np.uint8))


def draw_ring(canvas: np.ndarray, cx, cy, r_outer, thickness, value) -> np.ndarray:
    """Literal-loop annulus painter, independent of the synth module."""
    expect = np.zeros(canvas.shape, dtype=bool)
    for y in range(canvas.shape[0]):
        for x in range(canvas.shape[1]):
            d2 = (x - cx) ** 2 + (y - cy) ** 2
            if (r_outer - thickness) ** 2 < d2 <= r_outer**2:
                canvas[y, x] = value
                expect[y, x] = True
    return expect


# ---------------------------------------------------------------------------
# params


@pytest.mark.parametrize(
    "kwargs",
    [
        {"block": 30},
        {"block": 1},
        {"smooth_bright_k": 2},
        {"close_dark_k": -1},
        {"canny_low": 130.0},
        {"canny_low": -1.0},
        {"tile": 0},
        {"min_area_0or1_hole": -1},
        {"solidity_max_0hole": 0.0},
        {"solidity_max_0hole": 1.5},
    ],
)
def test_params_validation(kwargs):
    with pytest.raises(ParamError):
        ClassicalParams(**kwargs)


def test_params_defaults_valid():
    p = ClassicalParams()
    assert p.min_area_0or1_hole == 20
    assert p.min_area_multi_hole == 5


# ---------------------------------------------------------------------------
# tile brightness map


def test_bright_tile_map_split_image():
    px = np.full((32, 32), 50, np.uint8)
    px[:, 16:] = 250
    bright = classical.bright_tile_map(gray(px), 8)
    assert not bright[:, :16].any()
    assert bright[:, 16:].all()


def test_bright_tile_map_matches_brute_force():
    rng = np.random.default_rng(2)
    px = rng.integers(0, 256, size=(40, 52)).astype(np.uint8)
    tile = 16
    got = classical.bright_tile_map(gray(px), tile)
    total_mean = px.astype(np.float64).mean()
    for ty in range(0, 40, tile):
        for tx in range(0, 52, tile):
            sub = px[ty : ty + tile, tx : tx + tile]
            expect = sub.astype(np.float64).mean() >= total_mean
            block = got[ty : ty + tile, tx : tx + tile]
            assert (block == expect).all()


def test_bright_tile_map_constant_image_all_bright():
    assert classical.bright_tile_map(gray(np.full((20, 20), 7)), 6).all()


# ---------------------------------------------------------------------------
# preprocess


def test_preprocess_constant_image_empty():
    img = gray(np.full((64, 64), 180))
    assert not classical.preprocess(img, P).any()


def test_preprocess_rejects_small_image():
    with pytest.raises(ImageTooSmallError):
        classical.preprocess(gray(np.zeros((63, 64))), P)


def test_preprocess_ring_yields_boundary_only():
    px = np.full((128, 128), 200, np.uint8)
    annulus = draw_ring(px, 64, 64, 10, 2, 110)
    mask = classical.preprocess(gray(px), P)
    # the local-threshold view marks exactly the drawn annulus, and the
    # edge view's fill covers it, so the intersection is the annulus itself
    assert (mask == annulus).all()
    assert not mask[64, 64]
    labels = connected_components(mask, 8)
    assert labels.num_labels == 1
    from crystalcount.raster import count_holes

    assert count_holes(mask) == 1


def test_preprocess_illumination_ramp_same_count():
    flat = np.full((128, 128), 200, np.uint8)
    draw_ring(flat, 64, 64, 12, 2, 110)
    ramp = np.linspace(-40, 40, 128)[None, :]
    ramped = np.clip(flat.astype(np.int64) + np.rint(ramp).astype(np.int64), 0, 255).astype(
        np.uint8
    )
    n_flat = connected_components(classical.preprocess(gray(flat), P), 8).num_labels
    n_ramp = connected_components(classical.preprocess(gray(ramped), P), 8).num_labels
    assert n_flat == n_ramp == 1


# ---------------------------------------------------------------------------
# keep decision


@pytest.mark.parametrize(
    "holes,area,hull,expect",
    [
        (0, 19, 1000.0, False),  # under the one-crystal size gate
        (1, 19, 0.0, False),
        (1, 20, 0.0, True),  # openings skip the solidity gate
        (0, 20, 100.0, True),  # sparse open contour
        (0, 20, 25.0, False),  # compact dust
        (0, 60, 100.0, True),  # exactly at the solidity limit
        (0, 61, 100.0, False),
        (0, 100, 0.0, False),  # degenerate hull
        (2, 4, 0.0, False),  # under the overlap size gate
        (2, 5, 0.0, True),
        (5, 5, 0.0, True),
        (3, 4, 0.0, False),
    ],
)
def test_cluster_keep_decision(holes, area, hull, expect):
    assert classical.cluster_keep_decision(holes, area, hull, P) is expect


# ---------------------------------------------------------------------------
# small-cluster removal


def label_map_of(mask: np.ndarray) -> LabelMap:
    return connected_components(np.asarray(mask, dtype=bool), 8)


def test_remove_solid_16px_blob():
    mask = np.zeros((10, 10), bool)
    mask[3:7, 3:7] = True  # area 16, no openings
    out = classical.remove_small_clusters(label_map_of(mask), P)
    assert out.num_labels == 0


def test_remove_compact_dust_despite_size():
    mask = np.zeros((12, 12), bool)
    mask[3:9, 3:9] = True  # area 36, no openings, solidity 36/25 > 0.6
    out = classical.remove_small_clusters(label_map_of(mask), P)
    assert out.num_labels == 0


def test_keep_large_thin_ring():
    mask = np.zeros((34, 34), bool)
    mask[2:32, 2:32] = True
    mask[3:31, 3:31] = False  # 30x30 outline, area 116, one opening
    out = classical.remove_small_clusters(label_map_of(mask), P)
    assert out.num_labels == 1
    assert (out.labels[mask] == 1).all()


def test_keep_six_pixel_double_opening():
    # two merged single-pixel openings: the smallest possible h=2 cluster
    mask = np.zeros((5, 6), bool)
    for x, y in [(1, 0), (0, 1), (2, 1), (1, 2), (3, 2), (2, 3)]:
        mask[y, x] = True
    lm = label_map_of(mask)
    assert lm.num_labels == 1
    out = classical.remove_small_clusters(lm, P)
    assert out.num_labels == 1
    inst = classical.instances_from_labels(out)
    assert inst[0].hole_count == 2
    assert inst[0].crystal_count == 2
    assert inst[0].area_px == 6


def test_keep_open_arc_by_solidity():
    mask = np.zeros((26, 26), bool)
    for deg in range(0, 270, 2):  # three-quarter circle, radius 10
        a = math.radians(deg)
        mask[int(round(12 + 10 * math.sin(a))), int(round(12 + 10 * math.cos(a)))] = True
    lm = label_map_of(mask)
    assert lm.num_labels == 1
    region = lm.labels == 1
    from crystalcount.raster import convex_hull_area, count_holes

    assert count_holes(region) == 0
    area = int(region.sum())
    assert area >= 20
    assert area / convex_hull_area(region) <= 0.6
    out = classical.remove_small_clusters(lm, P)
    assert out.num_labels == 1


def test_removal_relabels_in_raster_order():
    mask = np.zeros((40, 60), bool)
    mask[2, 2] = True  # speck, removed
    mask[4:34, 4:34] = True
    mask[5:33, 5:33] = False  # ring A, kept
    mask[10:14, 40:44] = True  # 16 px solid, removed
    mask[20:36, 40:56] = True
    mask[21:35, 41:55] = False  # ring B, kept
    out = classical.remove_small_clusters(label_map_of(mask), P)
    assert out.num_labels == 2
    assert out.labels[4, 4] == 1
    assert out.labels[20, 40] == 2
    assert not out.labels[2, 2]
    assert not out.labels[10, 40]


def test_removal_idempotent():
    rng = np.random.default_rng(101)
    for _ in range(5):
        mask = rng.random((48, 48)) < 0.42
        once = classical.remove_small_clusters(label_map_of(mask), P)
        twice = classical.remove_small_clusters(once, P)
        assert once.num_labels == twice.num_labels
        assert (once.labels == twice.labels).all()


def test_survivors_satisfy_their_gates():
    from crystalcount.raster import convex_hull_area, count_holes

    rng = np.random.default_rng(55)
    mask = rng.random((64, 64)) < 0.45
    out = classical.remove_small_clusters(label_map_of(mask), P)
    for i in range(1, out.num_labels + 1):
        region = out.labels == i
        area = int(region.sum())
        holes = count_holes(region)
        hull = convex_hull_area(region) if holes == 0 else 0.0
        assert classical.cluster_keep_decision(holes, area, hull, P)


# ---------------------------------------------------------------------------
# instances


def test_instances_fields_on_ring():
    mask = np.zeros((20, 24), bool)
    mask[4:16, 6:18] = True
    mask[5:15, 7:17] = False
    inst = classical.instances_from_labels(label_map_of(mask))
    assert len(inst) == 1
    rec = inst[0]
    assert rec.id == 1
    assert rec.area_px == int(mask.sum())
    assert rec.centroid == pytest.approx((11.5, 9.5))
    assert rec.hole_count == 1
    assert rec.crystal_count == 1
    assert rec.boundary
    for x, y in rec.boundary:
        assert mask[y, x]
    # consecutive contour points stay adjacent
    closed = rec.boundary + rec.boundary[:1]
    for a, b in zip(closed, closed[1:]):
        assert max(abs(a[0] - b[0]), abs(a[1] - b[1])) == 1


# ---------------------------------------------------------------------------
# full pipeline


def test_analyze_blank_image():
    assert classical.analyze_classical(gray(np.full((64, 64), 150)), P) == []


def test_analyze_rejects_dimension_mismatch():
    img = gray(np.full((64, 64), 150))
    with pytest.raises(DimensionMismatchError):
        classical.analyze_classical(img, P, np.zeros((32, 32), bool))


def test_analyze_phantom_rings_exact():
    img, truth = synth.ring_phantom(512, 512, 12, 0, seed=3)
    inst = classical.analyze_classical(img, P)
    assert len(inst) == 12
    assert all(i.crystal_count == 1 for i in inst)
    assert all(i.hole_count == 1 for i in inst)
    # every instance centroid sits near some true ring center
    for rec in inst:
        d = min(
            math.hypot(rec.centroid[0] - s.cx, rec.centroid[1] - s.cy) for s in truth.rings
        )
        assert d < 3.0


def test_analyze_exclusion_removes_covered_rings():
    img, truth = synth.ring_phantom(512, 512, 12, 0, seed=3)
    excl = np.zeros((512, 512), bool)
    yy, xx = np.mgrid[0:512, 0:512]
    for s in truth.rings[:3]:
        excl |= (xx - s.cx) ** 2 + (yy - s.cy) ** 2 <= (s.r + 1) ** 2
    inst = classical.analyze_classical(img, P, excl)
    assert len(inst) == 9


def test_analyze_full_exclusion_empty():
    img, _ = synth.ring_phantom(256, 256, 4, 0, seed=9)
    assert classical.analyze_classical(img, P, np.ones((256, 256), bool)) == []


def test_analyze_manual_bubble_exclusion():
    img, truth = synth.ring_phantom(640, 640, 8, 2, seed=14)
    excl = np.zeros((640, 640), bool)
    yy, xx = np.mgrid[0:640, 0:640]
    for b in truth.bubbles:
        excl |= (xx - b.cx) ** 2 + (yy - b.cy) ** 2 <= (b.r + 6) ** 2
    inst = classical.analyze_classical(img, P, excl)
    assert len(inst) == 8


# ---------------------------------------------------------------------------
# fixture generators


def test_phantom_deterministic():
    a, ta = synth.ring_phantom(256, 256, 5, 1, seed=7)
    b, tb = synth.ring_phantom(256, 256, 5, 1, seed=7)
    assert (a.pixels == b.pixels).all()
    assert ta == tb
    c, _ = synth.ring_phantom(256, 256, 5, 1, seed=8)
    assert (a.pixels != c.pixels).any()


def test_phantom_truth_counts_and_separation():
    _, truth = synth.ring_phantom(1024, 768, 20, 3, seed=5)
    assert len(truth.rings) == 20
    assert len(truth.bubbles) == 3
    for i, a in enumerate(truth.rings):
        for b in truth.rings[i + 1 :]:
            assert math.hypot(a.cx - b.cx, a.cy - b.cy) >= a.r + b.r + 12
        for u in truth.bubbles:
            assert math.hypot(a.cx - u.cx, a.cy - u.cy) >= 1.5 * a.r + u.r + 15


def test_star_blobs_disjoint_and_sized():
    lm = synth.star_blob_labels(320, 320, 15, seed=4)
    assert lm.num_labels == 15
    assert set(np.unique(lm.labels)) == set(range(16))
    for i in range(1, 16):
        region = lm.labels == i
        area = int(region.sum())
        assert area >= math.pi * 25  # min radius never below 5 px
        ys, xs = np.nonzero(region)
        spread = max(xs.max() - xs.min(), ys.max() - ys.min())
        assert spread <= 2 * 15 * 1.25 + 2


def test_star_blobs_deterministic():
    a = synth.star_blob_labels(256, 256, 8, seed=11)
    b = synth.star_blob_labels(256, 256, 8, seed=11)
    assert (a.labels == b.labels).all()
