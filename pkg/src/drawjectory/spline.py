"""Natural cubic splines and decoupled per-axis trajectory planning.

A trajectory is three 1D natural cubic splines over the shared waypoint
timestamps, one per spatial axis. Position, velocity and acceleration come
from evaluating the splines and their first two derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import NonMonotoneKnots, NonPositiveStep, OutOfDomain, TooFewPoints
from .sampling import WaypointSet


@dataclass(frozen=True)
class CubicSpline1D:
    """Piecewise cubic s_i(x) = a_i(x-x_i)^3 + b_i(x-x_i)^2 + c_i(x-x_i) + d_i
    with zero second derivative at both boundary knots.

    `coefficients` has one row (a_i, b_i, c_i, d_i) per segment.
    """

    knots: np.ndarray
    values: np.ndarray
    coefficients: np.ndarray

    @property
    def num_segments(self) -> int:
        return len(self.knots) - 1


def build_natural_spline_1d(pairs) -> CubicSpline1D:
    """Interpolating natural cubic spline through (x, y) pairs.

    Second-derivative unknowns are solved with the Thomas algorithm; the
    interior system is symmetric tridiagonal and diagonally dominant, so no
    pivoting is needed.
    """
    arr = np.asarray(pairs, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("pairs must be a sequence of (x, y)")
    if arr.shape[0] < 2:
        raise TooFewPoints(f"need at least 2 pairs, got {arr.shape[0]}")
    x = np.ascontiguousarray(arr[:, 0])
    y = np.ascontiguousarray(arr[:, 1])
    if np.any(np.diff(x) <= 0):
        raise NonMonotoneKnots("knot x-values must be strictly increasing")

    n = len(x)
    h = np.diff(x)
    m = np.zeros(n)  # second derivatives; natural ends stay zero
    if n > 2:
        # interior rows: h[i-1]*m[i-1] + 2(h[i-1]+h[i])*m[i] + h[i]*m[i+1] = rhs[i]
        slope = np.diff(y) / h
        rhs = 6.0 * (slope[1:] - slope[:-1])
        diag = 2.0 * (h[:-1] + h[1:])
        lower = h[1:-1].copy()
        upper = h[1:-1].copy()
        k = n - 2
        # forward elimination
        for i in range(1, k):
            w = lower[i - 1] / diag[i - 1]
            diag[i] -= w * upper[i - 1]
            rhs[i] -= w * rhs[i - 1]
        # back substitution
        sol = np.zeros(k)
        sol[-1] = rhs[-1] / diag[-1]
        for i in range(k - 2, -1, -1):
            sol[i] = (rhs[i] - upper[i] * sol[i + 1]) / diag[i]
        m[1:-1] = sol

    a = (m[1:] - m[:-1]) / (6.0 * h)
    b = m[:-1] / 2.0
    c = np.diff(y) / h - h * (2.0 * m[:-1] + m[1:]) / 6.0
    d = y[:-1].copy()
    coeffs = np.column_stack([a, b, c, d])
    return CubicSpline1D(knots=x, values=y, coefficients=coeffs)


def _segments_for(spline: CubicSpline1D, xs: np.ndarray) -> np.ndarray:
    knots = spline.knots
    if np.any(xs < knots[0]) or np.any(xs > knots[-1]):
        bad = xs[(xs < knots[0]) | (xs > knots[-1])][0]
        raise OutOfDomain(
            f"x={bad} outside [{knots[0]}, {knots[-1]}]"
        )
    seg = np.searchsorted(knots, xs, side="right") - 1
    return np.clip(seg, 0, spline.num_segments - 1)


def eval_spline_many(spline: CubicSpline1D, xs, order: int = 0) -> np.ndarray:
    """Evaluate value (order 0), first or second derivative at each x."""
    if order not in (0, 1, 2):
        raise ValueError(f"order must be 0, 1 or 2, got {order}")
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    seg = _segments_for(spline, xs)
    a, b, c, d = (spline.coefficients[seg, i] for i in range(4))
    u = xs - spline.knots[seg]
    if order == 0:
        return ((a * u + b) * u + c) * u + d
    if order == 1:
        return (3.0 * a * u + 2.0 * b) * u + c
    return 6.0 * a * u + 2.0 * b


def eval_spline(spline: CubicSpline1D, x: float, order: int = 0) -> float:
    return float(eval_spline_many(spline, [x], order)[0])


@dataclass(frozen=True)
class Trajectory:
    """Three natural cubic splines over a shared knot vector of timestamps."""

    sx: CubicSpline1D
    sy: CubicSpline1D
    sz: CubicSpline1D
    t0: float
    tmax: float

    def evaluate(self, ts, order: int = 0) -> np.ndarray:
        """(len(ts), 3) array of position/velocity/acceleration rows."""
        return np.column_stack(
            [eval_spline_many(s, ts, order) for s in (self.sx, self.sy, self.sz)]
        )

    def position(self, t: float) -> np.ndarray:
        return self.evaluate([t], 0)[0]

    def velocity(self, t: float) -> np.ndarray:
        return self.evaluate([t], 1)[0]

    def acceleration(self, t: float) -> np.ndarray:
        return self.evaluate([t], 2)[0]

    @property
    def knots(self) -> np.ndarray:
        return self.sx.knots


@dataclass(frozen=True)
class ControlPoint:
    """Trajectory state at one timestamp, as handed to the vehicle."""

    t: float
    position: tuple[float, float, float]
    velocity: tuple[float, float, float]
    acceleration: tuple[float, float, float]


def plan_trajectory(waypoints: WaypointSet) -> Trajectory:
    """Interpolate each axis separately over the waypoint timestamps."""
    ts = waypoints.times()
    pos = waypoints.positions()
    splines = [
        build_natural_spline_1d(np.column_stack([ts, pos[:, axis]]))
        for axis in range(3)
    ]
    return Trajectory(
        sx=splines[0],
        sy=splines[1],
        sz=splines[2],
        t0=float(ts[0]),
        tmax=float(ts[-1]),
    )


def sample_times(t0: float, tmax: float, step: float) -> np.ndarray:
    """Grid t0, t0+step, ... with tmax always included as the final sample."""
    if step <= 0:
        raise NonPositiveStep(f"step must be > 0, got {step}")
    tol = 1e-9 * step
    count = 0
    while t0 + count * step < tmax - tol:
        count += 1
    ts = t0 + step * np.arange(count)
    return np.append(ts, tmax)


def sample_trajectory(trajectory: Trajectory, step: float) -> list[ControlPoint]:
    """Control points (position, velocity, acceleration) on the step grid."""
    ts = sample_times(trajectory.t0, trajectory.tmax, step)
    pos = trajectory.evaluate(ts, 0)
    vel = trajectory.evaluate(ts, 1)
    acc = trajectory.evaluate(ts, 2)
    return [
        ControlPoint(
            t=float(t),
            position=tuple(float(v) for v in p),
            velocity=tuple(float(v) for v in v_),
            acceleration=tuple(float(v) for v in a_),
        )
        for t, p, v_, a_ in zip(ts, pos, vel, acc)
    ]
