"""Interpolation error between a demonstration and its planned trajectory.

Per-point position error vectors, their RSME and MAE aggregates, and the
normalized per-point series that drives the green-to-red error coloring.
The unusual "RSME" spelling is kept in reports; the value is the
conventional RMSE of the error-vector norms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exceptions import EmptySeries, TimestampOutsideDomain
from .recording import TrackedPoint
from .spline import Trajectory


@dataclass(frozen=True)
class ErrorEntry:
    t: float
    e: tuple[float, float, float]
    norm: float


@dataclass(frozen=True)
class ErrorSeries:
    entries: tuple[ErrorEntry, ...]


@dataclass(frozen=True)
class ErrorReport:
    rsme: float
    mae: float
    series: ErrorSeries
    normalized: tuple[float, ...]


def position_error_series(
    demonstration: Sequence[TrackedPoint], trajectory: Trajectory
) -> ErrorSeries:
    """e_i = p_i - T(t_i) for every recorded point, componentwise."""
    ts = np.array([p.t for p in demonstration], dtype=float)
    if ts.size and (ts[0] < trajectory.t0 or ts[-1] > trajectory.tmax):
        raise TimestampOutsideDomain(
            f"demonstration spans [{ts[0]}, {ts[-1]}], "
            f"trajectory only [{trajectory.t0}, {trajectory.tmax}]"
        )
    planned = trajectory.evaluate(ts, 0)
    recorded = np.array([[p.x, p.y, p.z] for p in demonstration], dtype=float)
    errors = recorded - planned
    norms = np.linalg.norm(errors, axis=1)
    entries = tuple(
        ErrorEntry(t=float(t), e=tuple(float(v) for v in e), norm=float(n))
        for t, e, n in zip(ts, errors, norms)
    )
    return ErrorSeries(entries=entries)


def aggregate_errors(series: ErrorSeries) -> ErrorReport:
    """RSME = sqrt(mean of squared norms), MAE = mean of norms, plus the
    norm series scaled into [0, 1] by its maximum."""
    if not series.entries:
        raise EmptySeries("cannot aggregate an empty error series")
    norms = np.array([entry.norm for entry in series.entries], dtype=float)
    rsme = math.sqrt(float(np.mean(norms**2)))
    mae = float(np.mean(norms))
    peak = float(np.max(norms))
    if peak == 0.0:
        normalized = tuple(0.0 for _ in norms)
    else:
        normalized = tuple(float(n / peak) for n in norms)
    return ErrorReport(rsme=rsme, mae=mae, series=series, normalized=normalized)


def _blend_channel(value: float) -> int:
    # round half up, channels are non-negative
    return int(math.floor(value * 255.0 + 0.5))


def color_scale(report: ErrorReport) -> list[tuple[float, tuple[int, int, int]]]:
    """Per-point rgb, green (no deviation) blending linearly to red (the
    worst deviation in the series)."""
    out = []
    for entry, u in zip(report.series.entries, report.normalized):
        rgb = (_blend_channel(u), _blend_channel(1.0 - u), 0)
        out.append((entry.t, rgb))
    return out
