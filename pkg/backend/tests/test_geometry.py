"""Axis lines, their frames and point decomposition."""

import math

import pytest
from shapely.geometry import LineString, Point

from models import Point2
from services.errors import DegenerateLine, NonFiniteLine
from services.geometry_service import (
    decompose,
    distance_to_line,
    frame_of,
    line_from_slope,
    make_line,
    signed_offset,
    torus_phase,
)
from services.tolerance_config import ToleranceConfig

RECONSTRUCTION = ToleranceConfig.get_config("frame")["reconstruction_tolerance"]


def random_line(rng):
    while True:
        A, B = rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)
        if math.hypot(A, B) > 1e-3:
            return make_line(A, B, rng.uniform(-10.0, 10.0))


class TestLines:
    def test_make_line(self):
        line = make_line(3.0, 4.0, 25.0)
        assert (line.A, line.B, line.C) == (3.0, 4.0, 25.0)
        assert line.norm == 5.0

    def test_degenerate(self):
        with pytest.raises(DegenerateLine):
            make_line(0.0, 0.0, 5.0)

    @pytest.mark.parametrize("coefficients", [(math.inf, 1.0, 0.0), (1.0, math.nan, 0.0), (1.0, 1.0, -math.inf)])
    def test_non_finite(self, coefficients):
        with pytest.raises(NonFiniteLine):
            make_line(*coefficients)


    @pytest.mark.parametrize("m, k, expected", [(1.0, 0.0, (-1.0, 1.0, 0.0)), (0.0, 0.0, (0.0, 1.0, 0.0)),
                                                (2.0, -3.0, (-2.0, 1.0, -3.0))])
    def test_slope_form(self, m, k, expected):
        line = line_from_slope(m, k)
        assert (line.A, line.B, line.C) == expected


class TestFrame:
    def test_y_axis(self):
        frame = frame_of(make_line(1.0, 0.0, 0.0))
        assert (frame.origin.x, frame.origin.y) == (0.0, 0.0)
        assert (frame.tangent.x, frame.tangent.y) == (0.0, 1.0)
        assert (frame.normal.x, frame.normal.y) == (1.0, 0.0)

    def test_torus_line(self, torus_line):
        frame = frame_of(torus_line)
        assert (frame.origin.x, frame.origin.y) == pytest.approx((3.0, 4.0), abs=1e-12)
        assert (frame.tangent.x, frame.tangent.y) == pytest.approx((-0.8, 0.6), abs=1e-15)
        assert (frame.normal.x, frame.normal.y) == pytest.approx((0.6, 0.8), abs=1e-15)

    def test_horizontal_line(self):
        frame = frame_of(make_line(0.0, 2.0, 6.0))
        assert (frame.origin.x, frame.origin.y) == pytest.approx((0.0, 3.0), abs=1e-15)
        assert (frame.tangent.x, frame.tangent.y) == pytest.approx((-1.0, 0.0), abs=1e-15)
        assert (frame.normal.x, frame.normal.y) == pytest.approx((0.0, 1.0), abs=1e-15)

    def test_orthonormal_and_on_line(self, rng):
        unit = ToleranceConfig.unit_tolerance()
        for _ in range(1000):
            line = random_line(rng)
            frame = frame_of(line)
            u, v, origin = frame.tangent, frame.normal, frame.origin
            assert abs(math.hypot(u.x, u.y) - 1.0) <= unit
            assert abs(math.hypot(v.x, v.y) - 1.0) <= unit
            assert abs(u.x * v.x + u.y * v.y) <= unit
            assert abs(line.residual(origin.x, origin.y)) <= ToleranceConfig.line_membership_bound(line.C)

    @pytest.mark.parametrize("scale", [-1.0, 3.0, 0.01])
    def test_origin_is_scale_invariant(self, scale, torus_line):
        scaled = make_line(scale * torus_line.A, scale * torus_line.B, scale * torus_line.C)
        a, b = frame_of(torus_line).origin, frame_of(scaled).origin
        assert (b.x, b.y) == pytest.approx((a.x, a.y), rel=1e-12)


class TestDecompose:
    def test_y_axis(self):
        parts = decompose(Point2(x=2.0, y=5.0), make_line(1.0, 0.0, 0.0))
        assert parts.along == pytest.approx(5.0)
        assert parts.signed_offset == pytest.approx(2.0)
        assert (parts.foot.x, parts.foot.y) == pytest.approx((0.0, 5.0))

    def test_torus_line_origin(self, torus_line):
        parts = decompose(Point2(x=0.0, y=0.0), torus_line)
        assert parts.signed_offset == pytest.approx(-5.0)
        assert parts.along == pytest.approx(0.0, abs=1e-15)
        assert (parts.foot.x, parts.foot.y) == pytest.approx((3.0, 4.0))

    def test_reconstruction(self, rng):
        for _ in range(1000):
            line = random_line(rng)
            frame = frame_of(line)
            p = Point2(x=rng.uniform(-10.0, 10.0), y=rng.uniform(-10.0, 10.0))
            parts = decompose(p, line)
            x = frame.origin.x + parts.along * frame.tangent.x + parts.signed_offset * frame.normal.x
            y = frame.origin.y + parts.along * frame.tangent.y + parts.signed_offset * frame.normal.y
            assert abs(x - p.x) <= RECONSTRUCTION
            assert abs(y - p.y) <= RECONSTRUCTION
            assert abs(line.residual(parts.foot.x, parts.foot.y)) <= ToleranceConfig.line_membership_bound(line.C)

    def test_distance_is_distance_to_foot(self, rng):
        for _ in range(1000):
            line = random_line(rng)
            p = Point2(x=rng.uniform(-10.0, 10.0), y=rng.uniform(-10.0, 10.0))
            foot = decompose(p, line).foot
            assert distance_to_line(p, line) == pytest.approx(math.hypot(p.x - foot.x, p.y - foot.y), abs=1e-9)


class TestDistance:
    @pytest.mark.parametrize(
        "point, line, expected",
        [
            ((0.0, 0.0), (3.0, 4.0, 25.0), 5.0),
            ((2.0, 5.0), (1.0, 0.0, 0.0), 2.0),
            ((1.0, 1.0), (-1.0, 1.0, 0.0), 0.0),
            ((0.0, 1.0), (-1.0, 1.0, 0.0), math.sqrt(0.5)),
        ],
    )
    def test_examples(self, point, line, expected):
        assert distance_to_line(Point2(x=point[0], y=point[1]), make_line(*line)) == pytest.approx(expected)

    def test_signed_offset_sides(self, torus_line):
        assert signed_offset(0.0, 0.0, torus_line) < 0.0
        assert signed_offset(6.0, 8.0, torus_line) == pytest.approx(5.0)

    def test_agrees_with_shapely(self, rng):
        for _ in range(200):
            line = random_line(rng)
            frame = frame_of(line)
            o, u = frame.origin, frame.tangent
            segment = LineString([(o.x - 1e4 * u.x, o.y - 1e4 * u.y), (o.x + 1e4 * u.x, o.y + 1e4 * u.y)])
            x, y = rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)
            expected = segment.distance(Point(x, y))
            assert distance_to_line(Point2(x=x, y=y), line) == pytest.approx(expected, rel=1e-9, abs=1e-7)


def test_torus_phase(torus_line):
    t0 = torus_phase(torus_line)
    assert math.cos(t0) == pytest.approx(0.6)
    assert math.sin(t0) == pytest.approx(0.8)
