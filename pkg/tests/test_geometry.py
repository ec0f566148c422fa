import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from geoprob.errors import DegenerateTriangle
from geoprob.geometry import (
    Point2,
    PolarPoint,
    SideLengths,
    Triangle,
    TriangleClass,
    classify,
    from_polar,
    is_degenerate,
    largest_angle,
    obtuse_mask,
    ratios,
    side_lengths,
    side_lengths_array,
    to_polar,
    to_polar_array,
)

coord = st.floats(-100, 100, allow_nan=False)
points = st.tuples(coord, coord)


def tri(a, b, c):
    return Triangle.from_coords(a, b, c)


@pytest.mark.parametrize(
    "verts, expected",
    [
        (((0, 0), (1, 0), (0, 1)), (1, 1, math.sqrt(2))),
        (((0, 0), (1, 0), (0.5, math.sqrt(3) / 2)), (1, 1, 1)),
        (((0, 0), (4, 0), (4, 3)), (3, 4, 5)),
    ],
)
def test_side_lengths_examples(verts, expected):
    sl = side_lengths(tri(*verts))
    assert (sl.s, sl.m, sl.l) == pytest.approx(expected, abs=1e-12)


def test_side_lengths_rejects_degenerate():
    with pytest.raises(DegenerateTriangle):
        side_lengths(tri((0, 0), (1, 0), (2, 0)))


@pytest.mark.parametrize(
    "sides, cls",
    [((3, 4, 5), TriangleClass.RIGHT), ((1, 1, 1), TriangleClass.ACUTE), ((2, 2, 3), TriangleClass.OBTUSE)],
)
def test_classify_examples(sides, cls):
    assert classify(SideLengths(*sides)) is cls


def test_ratios_examples():
    assert ratios(SideLengths(1, 1, 1)) == (1, 1)
    assert ratios(SideLengths(3, 4, 5)) == pytest.approx((0.75, 0.8))


def test_is_degenerate_examples():
    assert is_degenerate(tri((0, 0), (1, 0), (2, 0)))
    assert not is_degenerate(tri((0, 0), (1, 0), (0, 1)))
    assert is_degenerate(tri((0, 0), (1, 0), (0.5, 1e-15)), eps=1e-12)


def test_polar_examples():
    assert to_polar(Point2(1, 0)) == PolarPoint(1, 0)
    pp = to_polar(Point2(0, 1))
    assert pp.rho == pytest.approx(1) and pp.theta == pytest.approx(math.pi / 2)
    back = from_polar(to_polar(Point2(-0.3, 0.4)))
    assert back.x == pytest.approx(-0.3, abs=1e-12) and back.y == pytest.approx(0.4, abs=1e-12)


def test_theta_half_open_range():
    # (-1, -0.0) sits on the branch cut; it must map to +pi, never -pi.
    assert to_polar(Point2(-1.0, -0.0)).theta == math.pi
    _, theta = to_polar_array(np.array([[-1.0, -0.0], [-1.0, 0.0]]))
    assert (theta == math.pi).all()
    with pytest.raises(ValueError):
        PolarPoint(1.0, -math.pi)


@given(points, points, points)
def test_side_lengths_invariants(a, b, c):
    t = tri(a, b, c)
    assume(not is_degenerate(t, 1e-6))
    sl = side_lengths(t)
    assert 0 < sl.s <= sl.m <= sl.l
    assert sl.s + sl.m > sl.l
    assert sl.m / sl.l > 0.5


@given(points, points, points, st.floats(1e-3, 1e3))
def test_classify_scale_invariant(a, b, c, k):
    t = tri(a, b, c)
    assume(not is_degenerate(t, 1e-6))
    sl = side_lengths(t)
    # Stay away from the right-angle boundary where rounding could flip it.
    assume(abs(sl.s**2 + sl.m**2 - sl.l**2) > 1e-9 * sl.l**2)
    assert classify(sl.scaled(k)) is classify(sl)


@given(points, points, points)
def test_classify_agrees_with_angle_oracle(a, b, c):
    t = tri(a, b, c)
    assume(not is_degenerate(t, 1e-6))
    sl = side_lengths(t)
    angle = largest_angle(sl)
    assume(abs(angle - math.pi / 2) > 1e-9)
    assert (classify(sl) is TriangleClass.OBTUSE) == (angle > math.pi / 2)


def test_array_variants_match_scalar(rng):
    v = rng.uniform(-1, 1, (500, 3, 2))
    sides = side_lengths_array(v)
    mask = obtuse_mask(sides)
    for row, s, ob in zip(v, sides, mask):
        sl = side_lengths(Triangle.from_coords(*row))
        assert s == pytest.approx([sl.s, sl.m, sl.l], rel=1e-14)
        assert ob == (classify(sl) is TriangleClass.OBTUSE)
