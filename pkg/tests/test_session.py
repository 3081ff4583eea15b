"""Tests for canvas hit resolution and interactive session state."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from sectormap.geometry import DEFAULT_SPEC, Point, sector_of
from sectormap.raster import blank, build_library, xor_compose
from sectormap.session import SessionState, hit_canvas
from sectormap.state import empty, parse_bits, sectors_of


@pytest.fixture()
def session(small_spec):
    return SessionState(build_library(small_spec))


class TestHitCanvas:
    def test_known_click(self):
        # Canvas (286, 182) is centered (30, 10), inside ring 1 slice 0.
        assert hit_canvas(DEFAULT_SPEC, 286, 182) == 1

    def test_corner_misses(self):
        assert hit_canvas(DEFAULT_SPEC, 0, 0) is None
        assert hit_canvas(DEFAULT_SPEC, 511, 383) is None

    def test_center_click(self):
        assert hit_canvas(DEFAULT_SPEC, 256, 192) == 1

    def test_y_axis_points_up(self):
        # Above the center on screen means positive centered y: slice 1,
        # not slice 6.
        assert hit_canvas(DEFAULT_SPEC, 266, 162) == sector_of(
            Point(10.0, 30.0), DEFAULT_SPEC
        )

    @given(
        st.floats(min_value=0.0, max_value=512.0),
        st.floats(min_value=0.0, max_value=384.0),
    )
    def test_agrees_with_manual_translation(self, x, y):
        centered = Point(x - 256.0, 192.0 - y)
        assert hit_canvas(DEFAULT_SPEC, x, y) == sector_of(centered, DEFAULT_SPEC)


class TestSessionState:
    def test_starts_empty(self, session):
        assert session.status.bits == 0
        assert session.highlight.count_set() == 0
        assert session.display() == session.library.skeleton

    def test_hit_toggles_status_bit(self, session):
        spec = session.spec
        sector = session.hit(spec.center.x + 3, spec.center.y - 2)
        assert sector is not None
        assert sectors_of(session.status) == [sector]
        assert session.hit(spec.center.x + 3, spec.center.y - 2) == sector
        assert session.status.bits == 0

    def test_missed_hit_changes_nothing(self, session):
        before = session.status
        assert session.hit(0, 0) is None
        assert session.status == before

    def test_set_status_rebuilds_highlight(self, session):
        session.set_status(parse_bits("000000000000000000010011", 24))
        expected = blank(session.spec.canvas_width, session.spec.canvas_height)
        for sector in (1, 2, 5):
            expected = xor_compose(expected, session.library.mask(sector))
        assert session.highlight == expected
        assert session.display() == session.render()

    def test_reset(self, session):
        session.hit(session.spec.center.x, session.spec.center.y)
        session.reset()
        assert session.status.bits == 0
        assert session.display() == session.library.skeleton

    def test_set_status_rejects_wrong_width(self, session):
        with pytest.raises(ValueError):
            session.set_status(empty(10))

    def test_display_matches_render_after_random_walk(self, session):
        rng = random.Random(20240817)
        spec = session.spec
        for _ in range(60):
            x = rng.uniform(0, spec.canvas_width)
            y = rng.uniform(0, spec.canvas_height)
            session.hit(x, y)
            assert session.display() == session.render()

    def test_set_status_then_hits_stay_coherent(self, session):
        session.set_status(parse_bits("100000000000000000010011", 24))
        session.hit(session.spec.center.x + 1, session.spec.center.y - 1)
        assert session.display() == session.render()
