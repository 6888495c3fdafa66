import math

import numpy as np
import pytest

from drawjectory.exceptions import NonMonotoneKnots, NonPositiveStep, OutOfDomain, TooFewPoints
from drawjectory.recording import TrackedPoint
from drawjectory.sampling import WaypointSet
from drawjectory.spline import (
    build_natural_spline_1d,
    eval_spline,
    eval_spline_many,
    plan_trajectory,
    sample_times,
    sample_trajectory,
)

from oracles import dense_natural_spline_coefficients


def _random_knots(rng, n, lo=0.0, span=10.0):
    xs = lo + np.sort(rng.uniform(0, span, size=n))
    while np.min(np.diff(xs)) < 0.05:  # keep room for finite differences
        xs = lo + np.sort(rng.uniform(0, span, size=n))
    return xs


def _segment_eval(coeffs, xi, x, order):
    a, b, c, d = coeffs
    u = x - xi
    if order == 0:
        return ((a * u + b) * u + c) * u + d
    if order == 1:
        return (3 * a * u + 2 * b) * u + c
    return 6 * a * u + 2 * b


def test_two_point_spline_is_linear():
    s = build_natural_spline_1d([(0, 0), (1, 1)])
    assert s.num_segments == 1
    np.testing.assert_allclose(s.coefficients, [[0, 0, 1, 0]], atol=1e-15)
    assert eval_spline(s, 0.5) == pytest.approx(0.5, abs=1e-15)


def test_constant_spline():
    s = build_natural_spline_1d([(0, 4.2), (1, 4.2), (2, 4.2)])
    for x in (0.0, 0.3, 1.7, 2.0):
        assert eval_spline(s, x, 0) == pytest.approx(4.2, abs=1e-12)
        assert eval_spline(s, x, 1) == pytest.approx(0.0, abs=1e-12)
        assert eval_spline(s, x, 2) == pytest.approx(0.0, abs=1e-12)


def test_three_point_matches_dense_solve():
    pairs = [(0, 0), (1, 1), (2, 0)]
    s = build_natural_spline_1d(pairs)
    expected = dense_natural_spline_coefficients([0, 1, 2], [0, 1, 0])
    np.testing.assert_allclose(s.coefficients, expected, atol=1e-12)


def test_random_splines_match_dense_solve(rng):
    for _ in range(30):
        n = int(rng.integers(3, 7))
        xs = _random_knots(rng, n)
        ys = rng.uniform(-2, 2, size=n)
        s = build_natural_spline_1d(np.column_stack([xs, ys]))
        expected = dense_natural_spline_coefficients(xs, ys)
        np.testing.assert_allclose(s.coefficients, expected, atol=1e-8)


def test_interpolates_knots_exactly(rng):
    xs = _random_knots(rng, 12)
    ys = rng.uniform(-3, 3, size=12)
    s = build_natural_spline_1d(np.column_stack([xs, ys]))
    for x, y in zip(xs, ys):
        assert abs(eval_spline(s, float(x)) - y) <= 1e-9


def test_natural_boundary(rng):
    xs = _random_knots(rng, 9)
    ys = rng.uniform(-3, 3, size=9)
    s = build_natural_spline_1d(np.column_stack([xs, ys]))
    assert abs(eval_spline(s, float(xs[0]), 2)) <= 1e-9
    assert abs(eval_spline(s, float(xs[-1]), 2)) <= 1e-9


def test_c2_continuity_at_interior_knots(rng):
    xs = _random_knots(rng, 10)
    ys = rng.uniform(-3, 3, size=10)
    s = build_natural_spline_1d(np.column_stack([xs, ys]))
    for i in range(1, s.num_segments):
        x = float(xs[i])
        for order in (0, 1, 2):
            left = _segment_eval(s.coefficients[i - 1], xs[i - 1], x, order)
            right = _segment_eval(s.coefficients[i], xs[i], x, order)
            assert abs(left - right) <= 1e-8


def test_derivatives_match_finite_differences(rng):
    h = 1e-5
    for _ in range(10):
        n = int(rng.integers(4, 12))
        xs = _random_knots(rng, n)
        ys = rng.uniform(-2, 2, size=n)
        s = build_natural_spline_1d(np.column_stack([xs, ys]))
        probes = (xs[:-1] + np.diff(xs) * rng.uniform(0.25, 0.75, size=n - 1))
        for x in probes:
            f = lambda q: eval_spline(s, q, 0)
            d1 = (f(x + h) - f(x - h)) / (2 * h)
            d2 = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h)
            a1 = eval_spline(s, float(x), 1)
            a2 = eval_spline(s, float(x), 2)
            assert abs(a1 - d1) <= 1e-5 * max(1.0, abs(a1))
            assert abs(a2 - d2) <= 1e-4 * max(1.0, abs(a2))


def test_eval_errors():
    s = build_natural_spline_1d([(0, 0), (1, 1)])
    with pytest.raises(OutOfDomain):
        eval_spline(s, -0.1)
    with pytest.raises(OutOfDomain):
        eval_spline(s, 1.1)
    with pytest.raises(ValueError):
        eval_spline(s, 0.5, order=3)
    assert eval_spline(s, 0.0) == 0.0
    assert eval_spline(s, 1.0) == pytest.approx(1.0, abs=1e-12)


def test_build_errors():
    with pytest.raises(TooFewPoints):
        build_natural_spline_1d([(0, 0)])
    with pytest.raises(NonMonotoneKnots):
        build_natural_spline_1d([(0, 0), (0, 1)])
    with pytest.raises(NonMonotoneKnots):
        build_natural_spline_1d([(1, 0), (0, 1)])


def _waypoints(rows):
    return WaypointSet(points=tuple(TrackedPoint(*r) for r in rows))


def test_plan_two_waypoints_straight_line():
    traj = plan_trajectory(_waypoints([(0, 0, 0, 1), (2, 1, 0, 1)]))
    np.testing.assert_allclose(traj.position(1.0), [0.5, 0, 1], atol=1e-12)
    assert traj.t0 == 0.0 and traj.tmax == 2.0


def test_plan_interpolates_waypoints(rng):
    ts = np.sort(rng.uniform(0, 8, size=9))
    while np.min(np.diff(ts)) < 0.05:
        ts = np.sort(rng.uniform(0, 8, size=9))
    pos = rng.uniform(0, 3, size=(9, 3))
    ws = _waypoints(np.column_stack([ts, pos]))
    traj = plan_trajectory(ws)
    for t, p in zip(ts, pos):
        assert np.linalg.norm(traj.position(float(t)) - p) <= 1e-9


def test_plan_natural_endpoint_acceleration(rng):
    ts = np.arange(7, dtype=float)
    pos = rng.uniform(0, 3, size=(7, 3))
    traj = plan_trajectory(_waypoints(np.column_stack([ts, pos])))
    assert np.linalg.norm(traj.acceleration(0.0)) <= 1e-9
    assert np.linalg.norm(traj.acceleration(6.0)) <= 1e-9


def test_axis_decoupling_constant_axes(rng):
    ts = np.arange(6, dtype=float)
    xs = rng.uniform(0, 3, size=6)
    ws = _waypoints([(t, x, 1.5, 2.5) for t, x in zip(ts, xs)])
    traj = plan_trajectory(ws)
    probe = np.linspace(0, 5, 101)
    np.testing.assert_allclose(eval_spline_many(traj.sy, probe), 1.5, atol=1e-12)
    np.testing.assert_allclose(eval_spline_many(traj.sz, probe), 2.5, atol=1e-12)


def test_sample_grid_divides_evenly():
    ts = sample_times(0.0, 1.0, 0.25)
    np.testing.assert_allclose(ts, [0, 0.25, 0.5, 0.75, 1.0])


def test_sample_grid_appends_tmax():
    ts = sample_times(0.0, 1.0, 0.3)
    np.testing.assert_allclose(ts, [0, 0.3, 0.6, 0.9, 1.0])


def test_sample_grid_offset_start():
    ts = sample_times(1.5, 2.5, 0.25)
    np.testing.assert_allclose(ts, [1.5, 1.75, 2.0, 2.25, 2.5])


def test_sample_step_validation():
    traj = plan_trajectory(_waypoints([(0, 0, 0, 1), (2, 1, 0, 1)]))
    with pytest.raises(NonPositiveStep):
        sample_trajectory(traj, 0.0)
    with pytest.raises(NonPositiveStep):
        sample_trajectory(traj, -0.5)


def test_straight_line_constant_speed():
    start = np.array([0.5, 0.5, 1.0])
    end = np.array([3.5, 2.5, 2.0])
    duration = 4.0
    traj = plan_trajectory(_waypoints([(0, *start), (duration, *end)]))
    expected = np.linalg.norm(end - start) / duration
    for cp in sample_trajectory(traj, 0.21):
        assert math.dist(cp.velocity, (0, 0, 0)) == pytest.approx(expected, abs=1e-6)
        assert cp.t <= duration


def test_control_points_carry_derivatives():
    traj = plan_trajectory(_waypoints([(0, 0, 0, 1), (1, 1, 0, 1), (2, 1, 1, 1)]))
    cps = sample_trajectory(traj, 0.5)
    assert [cp.t for cp in cps] == [0.0, 0.5, 1.0, 1.5, 2.0]
    mid = cps[2]
    np.testing.assert_allclose(mid.position, traj.position(1.0), atol=1e-12)
    np.testing.assert_allclose(mid.velocity, traj.velocity(1.0), atol=1e-12)
    np.testing.assert_allclose(mid.acceleration, traj.acceleration(1.0), atol=1e-12)
