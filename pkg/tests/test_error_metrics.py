import math

import numpy as np
import pytest

from drawjectory.error_metrics import (
    ErrorEntry,
    ErrorSeries,
    aggregate_errors,
    color_scale,
    position_error_series,
)
from drawjectory.exceptions import EmptySeries, TimestampOutsideDomain
from drawjectory.recording import TrackedPoint, effective_points
from drawjectory.sampling import sample_equidistant
from drawjectory.spline import plan_trajectory, sample_trajectory

from conftest import make_path, random_path


def _series_with_norms(norms):
    entries = tuple(
        ErrorEntry(t=float(i), e=(float(n), 0.0, 0.0), norm=float(n))
        for i, n in enumerate(norms)
    )
    return ErrorSeries(entries=entries)


def test_zero_error_when_demo_equals_trajectory(rng):
    path = random_path(rng, 12)
    ws = sample_equidistant(effective_points(path), 12)
    traj = plan_trajectory(ws)
    demo = [
        TrackedPoint(cp.t, *cp.position) for cp in sample_trajectory(traj, 0.01)
    ]
    series = position_error_series(demo, traj)
    assert all(e.norm <= 1e-12 for e in series.entries)


def test_constant_offset_norms():
    path = make_path([(i * 0.5, 1 + i, 2.0, 1.0) for i in range(6)])
    pts = effective_points(path)
    traj = plan_trajectory(sample_equidistant(pts, 6))
    shifted = [TrackedPoint(p.t, p.x, p.y, p.z + 0.05) for p in pts]
    series = position_error_series(shifted, traj)
    for entry in series.entries:
        assert entry.norm == pytest.approx(0.05, abs=1e-9)
        assert entry.e[2] == pytest.approx(0.05, abs=1e-9)


def test_zero_error_at_waypoint_timestamps(rng):
    path = random_path(rng, 50)
    pts = effective_points(path)
    ws = sample_equidistant(pts, 10)
    traj = plan_trajectory(ws)
    series = position_error_series(pts, traj)
    for idx in ws.source_indices:
        assert series.entries[idx].norm <= 1e-9


def test_timestamp_outside_domain():
    pts = [TrackedPoint(t, 1, 1, 1) for t in (0.0, 1.0, 2.0)]
    traj = plan_trajectory(sample_equidistant(pts, 3))
    with pytest.raises(TimestampOutsideDomain):
        position_error_series(pts + [TrackedPoint(2.5, 1, 1, 1)], traj)


def test_aggregate_three_four():
    report = aggregate_errors(_series_with_norms([3.0, 4.0]))
    assert report.mae == pytest.approx(3.5, abs=1e-12)
    assert report.rsme == pytest.approx(math.sqrt(12.5), abs=1e-12)
    assert report.rsme == pytest.approx(3.5355339059327378, abs=1e-9)


def test_aggregate_zeros():
    report = aggregate_errors(_series_with_norms([0.0, 0.0, 0.0]))
    assert report.rsme == 0.0
    assert report.mae == 0.0
    assert report.normalized == (0.0, 0.0, 0.0)


def test_aggregate_constant_norms():
    report = aggregate_errors(_series_with_norms([0.7, 0.7, 0.7, 0.7]))
    assert report.rsme == pytest.approx(0.7, abs=1e-12)
    assert report.mae == pytest.approx(0.7, abs=1e-12)
    assert report.normalized == (1.0, 1.0, 1.0, 1.0)


def test_mae_never_exceeds_rsme(rng):
    for _ in range(200):
        norms = rng.uniform(0, 2, size=int(rng.integers(1, 40)))
        report = aggregate_errors(_series_with_norms(norms))
        assert report.mae <= report.rsme + 1e-12


def test_scaling_errors_scales_aggregates(rng):
    norms = rng.uniform(0.1, 2, size=20)
    k = 3.7
    base = aggregate_errors(_series_with_norms(norms))
    scaled = aggregate_errors(_series_with_norms(norms * k))
    assert scaled.rsme == pytest.approx(k * base.rsme, rel=1e-12)
    assert scaled.mae == pytest.approx(k * base.mae, rel=1e-12)
    np.testing.assert_allclose(scaled.normalized, base.normalized, atol=1e-12)


def test_empty_series_rejected():
    with pytest.raises(EmptySeries):
        aggregate_errors(ErrorSeries(entries=()))


def test_color_scale_endpoints_and_midpoint():
    report = aggregate_errors(_series_with_norms([0.0, 0.5, 1.0]))
    colors = color_scale(report)
    assert colors[0][1] == (0, 255, 0)
    assert colors[1][1] == (128, 128, 0)
    assert colors[2][1] == (255, 0, 0)
    assert [t for t, _ in colors] == [0.0, 1.0, 2.0]


def test_color_scale_is_deterministic(rng):
    norms = rng.uniform(0, 1, size=30)
    report = aggregate_errors(_series_with_norms(norms))
    assert color_scale(report) == color_scale(report)
    for _, (r, g, b) in color_scale(report):
        assert 0 <= r <= 255 and 0 <= g <= 255 and b == 0
