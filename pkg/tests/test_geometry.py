"""Tests for point translation, angle normalization, and sector classification."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from sectormap.geometry import (
    DEFAULT_SPEC,
    TWO_PI,
    PartitionSpec,
    Point,
    WindowRect,
    angle_of,
    ring_of,
    sector_of,
    slice_of,
    translate_point,
)

finite = st.floats(
    allow_nan=False, allow_infinity=False, min_value=-1e6, max_value=1e6
)

# A spec with semi-axes 2 and 1 so ring boundaries land on easy numbers.
NARROW = PartitionSpec(
    center=Point(8.0, 8.0),
    semi_axis_x=2.0,
    semi_axis_y=1.0,
    ring_count=3,
    slice_count=8,
    canvas_width=16,
    canvas_height=16,
)


# ---------------------------------------------------------------------------
# translate_point
# ---------------------------------------------------------------------------


class TestTranslatePoint:
    def test_origin_window_maps_center_to_zero(self):
        win = WindowRect(100.0, 50.0, 740.0, 530.0)
        center = Point(200.0, 150.0)
        out = translate_point(win, Point(300.0, 150.0), center)
        assert out == Point(0.0, 50.0)

    def test_flips_y_axis(self):
        win = WindowRect(0.0, 0.0, 640.0, 480.0)
        center = Point(100.0, 100.0)
        below = translate_point(win, Point(100.0, 150.0), center)
        assert below == Point(0.0, -50.0)
        above = translate_point(win, Point(100.0, 50.0), center)
        assert above == Point(0.0, 50.0)

    @given(finite, finite, finite, finite)
    def test_translation_is_exact_arithmetic(self, mx, my, cx, cy):
        win = WindowRect(-10.0, -20.0, 2000.0, 2000.0)
        out = translate_point(win, Point(mx, my), Point(cx, cy))
        assert out.x == (mx - win.left) - cx
        assert out.y == cy - (my - win.top)

    def test_rejects_nonfinite_coordinates(self):
        with pytest.raises(ValueError):
            Point(float("nan"), 0.0)
        with pytest.raises(ValueError):
            Point(0.0, float("inf"))

    def test_rejects_degenerate_window(self):
        with pytest.raises(ValueError):
            WindowRect(10.0, 0.0, 10.0, 100.0)
        with pytest.raises(ValueError):
            WindowRect(0.0, 100.0, 50.0, 100.0)


# ---------------------------------------------------------------------------
# angle_of
# ---------------------------------------------------------------------------


class TestAngleOf:
    def test_positive_x_axis(self):
        assert angle_of(Point(1.0, 0.0)) == 0.0

    def test_positive_y_axis(self):
        assert angle_of(Point(0.0, 2.0)) == pytest.approx(math.pi / 2, abs=1e-12)

    def test_third_quadrant(self):
        assert angle_of(Point(-1.0, -1.0)) == pytest.approx(5 * math.pi / 4, abs=1e-12)

    def test_origin_is_zero_by_convention(self):
        assert angle_of(Point(0.0, 0.0)) == 0.0

    def test_just_below_axis_wraps_to_near_two_pi(self):
        theta = angle_of(Point(1.0, -1e-9))
        assert theta == pytest.approx(TWO_PI, abs=1e-8)
        assert theta < TWO_PI

    @given(finite, finite)
    def test_matches_wrapped_atan2(self, x, y):
        if x == 0.0 and y == 0.0:
            return
        expected = math.atan2(y, x) % TWO_PI
        if expected >= TWO_PI:
            expected = 0.0
        assert angle_of(Point(x, y)) == pytest.approx(expected, abs=1e-12)

    @given(finite, finite)
    def test_range_half_open(self, x, y):
        theta = angle_of(Point(x, y))
        assert 0.0 <= theta < TWO_PI


# ---------------------------------------------------------------------------
# ring_of
# ---------------------------------------------------------------------------


class TestRingOf:
    def test_innermost(self):
        assert ring_of(Point(1.0, 0.0), NARROW) == 1

    def test_second_ring(self):
        assert ring_of(Point(3.0, 0.0), NARROW) == 2

    def test_outside_all_rings(self):
        assert ring_of(Point(0.0, 3.5), NARROW) is None

    def test_boundary_belongs_to_inner_ring(self):
        # (2, 0) satisfies (x/2)^2 + (y/1)^2 == 1 exactly.
        assert ring_of(Point(2.0, 0.0), NARROW) == 1
        assert ring_of(Point(4.0, 0.0), NARROW) == 2
        assert ring_of(Point(0.0, 3.0), NARROW) == 3

    def test_center_is_ring_one(self):
        assert ring_of(Point(0.0, 0.0), NARROW) == 1

    @given(
        st.floats(min_value=-8.0, max_value=8.0),
        st.floats(min_value=-8.0, max_value=8.0),
    )
    def test_result_is_smallest_containing_ellipse(self, x, y):
        def contained(i: int) -> bool:
            a = NARROW.semi_axis_y
            b = NARROW.semi_axis_x
            return (x / (i * b)) ** 2 + (y / (i * a)) ** 2 <= 1.0

        ring = ring_of(Point(x, y), NARROW)
        if ring is None:
            assert not any(contained(i) for i in range(1, NARROW.ring_count + 1))
        else:
            assert contained(ring)
            assert not any(contained(i) for i in range(1, ring))

    @given(
        st.floats(min_value=-8.0, max_value=8.0),
        st.floats(min_value=-8.0, max_value=8.0),
        st.floats(min_value=0.01, max_value=1.0),
    )
    def test_scaling_toward_center_never_increases_ring(self, x, y, s):
        outer = ring_of(Point(x, y), NARROW)
        if outer is None:
            return
        inner = ring_of(Point(x * s, y * s), NARROW)
        assert inner is not None
        assert inner <= outer


# ---------------------------------------------------------------------------
# slice_of
# ---------------------------------------------------------------------------


class TestSliceOf:
    def test_zero_angle(self):
        assert slice_of(0.0, DEFAULT_SPEC) == 0

    def test_straight_angle(self):
        # pi * 8 / (2 pi) is exactly 4.0 in floating point.
        assert slice_of(math.pi, DEFAULT_SPEC) == 4

    def test_near_two_pi_clamps_to_last_slice(self):
        assert slice_of(TWO_PI - 1e-12, DEFAULT_SPEC) == 7

    def test_rejects_angle_out_of_range(self):
        with pytest.raises(ValueError):
            slice_of(-0.1, DEFAULT_SPEC)
        with pytest.raises(ValueError):
            slice_of(TWO_PI, DEFAULT_SPEC)

    @given(st.floats(min_value=0.0, max_value=TWO_PI, exclude_max=True))
    def test_result_in_range_and_monotone_formula(self, theta):
        k = slice_of(theta, DEFAULT_SPEC)
        assert 0 <= k < DEFAULT_SPEC.slice_count
        exact = theta * DEFAULT_SPEC.slice_count / TWO_PI
        assert k == min(int(exact), DEFAULT_SPEC.slice_count - 1)


# ---------------------------------------------------------------------------
# sector_of
# ---------------------------------------------------------------------------


class TestSectorOf:
    def test_first_sector(self):
        assert sector_of(Point(30.0, 10.0), DEFAULT_SPEC) == 1

    def test_second_quadrant_first_ring(self):
        assert sector_of(Point(-30.0, 10.0), DEFAULT_SPEC) == 4

    def test_second_ring_first_slice(self):
        assert sector_of(Point(100.0, 0.0), DEFAULT_SPEC) == 9

    def test_outside_partition(self):
        assert sector_of(Point(300.0, 0.0), DEFAULT_SPEC) is None

    def test_center_lands_in_sector_one(self):
        assert sector_of(Point(0.0, 0.0), DEFAULT_SPEC) == 1

    def test_ring_major_numbering(self):
        # Hand-checked points: (ring, slice) pairs map to (ring-1)*8 + slice + 1.
        cases = [
            (Point(10.0, 30.0), 1, 1),  # ring 1, slice 1 -> 2
            (Point(-100.0, -1.0), 2, 4),  # ring 2, slice 4 -> 13
            (Point(155.0, -1.0), 2, 7),  # ring 2, slice 7 -> 16
            (Point(0.0, -130.0), 3, 6),  # ring 3, slice 6 -> 23
            (Point(231.0, -1.0), 3, 7),  # ring 3, slice 7 -> 24
        ]
        for p, ring, k in cases:
            assert ring_of(p, DEFAULT_SPEC) == ring
            assert slice_of(angle_of(p), DEFAULT_SPEC) == k
            assert sector_of(p, DEFAULT_SPEC) == (ring - 1) * 8 + k + 1

    @given(
        st.floats(min_value=-256.0, max_value=256.0),
        st.floats(min_value=-192.0, max_value=192.0),
    )
    def test_total_and_deterministic_over_interior(self, x, y):
        p = Point(x, y)
        first = sector_of(p, DEFAULT_SPEC)
        assert first == sector_of(p, DEFAULT_SPEC)
        if ring_of(p, DEFAULT_SPEC) is not None:
            assert first is not None
            assert 1 <= first <= DEFAULT_SPEC.sector_count
        else:
            assert first is None

    @given(
        st.floats(min_value=-256.0, max_value=256.0),
        st.floats(min_value=-192.0, max_value=192.0),
    )
    def test_agrees_with_ring_and_slice_composition(self, x, y):
        p = Point(x, y)
        ring = ring_of(p, DEFAULT_SPEC)
        got = sector_of(p, DEFAULT_SPEC)
        if ring is None:
            assert got is None
        else:
            k = slice_of(angle_of(p), DEFAULT_SPEC)
            assert got == (ring - 1) * DEFAULT_SPEC.slice_count + k + 1


# ---------------------------------------------------------------------------
# PartitionSpec validation and serialization
# ---------------------------------------------------------------------------


class TestPartitionSpec:
    def test_sector_count(self):
        assert DEFAULT_SPEC.sector_count == 24

    def test_rejects_capacity_overflow(self):
        with pytest.raises(ValueError):
            PartitionSpec(
                center=Point(256.0, 192.0),
                semi_axis_x=10.0,
                semi_axis_y=10.0,
                ring_count=5,
                slice_count=13,
                canvas_width=512,
                canvas_height=384,
            )

    def test_accepts_capacity_at_limit(self):
        spec = PartitionSpec(
            center=Point(256.0, 192.0),
            semi_axis_x=10.0,
            semi_axis_y=10.0,
            ring_count=8,
            slice_count=8,
            canvas_width=512,
            canvas_height=384,
        )
        assert spec.sector_count == 64

    def test_rejects_ellipse_exceeding_canvas(self):
        with pytest.raises(ValueError):
            PartitionSpec(
                center=Point(256.0, 192.0),
                semi_axis_x=90.0,
                semi_axis_y=60.0,
                ring_count=3,
                slice_count=8,
                canvas_width=512,
                canvas_height=384,
            )

    def test_rejects_nonpositive_fields(self):
        with pytest.raises(ValueError):
            PartitionSpec(
                center=Point(8.0, 8.0),
                semi_axis_x=0.0,
                semi_axis_y=1.0,
                ring_count=1,
                slice_count=1,
                canvas_width=16,
                canvas_height=16,
            )
        with pytest.raises(ValueError):
            PartitionSpec(
                center=Point(8.0, 8.0),
                semi_axis_x=1.0,
                semi_axis_y=1.0,
                ring_count=0,
                slice_count=1,
                canvas_width=16,
                canvas_height=16,
            )

    def test_dict_round_trip(self):
        data = DEFAULT_SPEC.to_dict()
        assert data == {
            "center_x": 256.0,
            "center_y": 192.0,
            "semi_axis_x": 80.0,
            "semi_axis_y": 60.0,
            "ring_count": 3,
            "slice_count": 8,
            "canvas_width": 512,
            "canvas_height": 384,
        }
        assert PartitionSpec.from_dict(data) == DEFAULT_SPEC

    def test_from_dict_rejects_missing_key(self):
        data = DEFAULT_SPEC.to_dict()
        del data["ring_count"]
        with pytest.raises(ValueError):
            PartitionSpec.from_dict(data)

    def test_from_dict_rejects_bad_types(self):
        data = DEFAULT_SPEC.to_dict()
        data["ring_count"] = 2.5
        with pytest.raises(ValueError):
            PartitionSpec.from_dict(data)
        data = DEFAULT_SPEC.to_dict()
        data["semi_axis_x"] = "wide"
        with pytest.raises(ValueError):
            PartitionSpec.from_dict(data)
        data = DEFAULT_SPEC.to_dict()
        data["slice_count"] = True
        with pytest.raises(ValueError):
            PartitionSpec.from_dict(data)
