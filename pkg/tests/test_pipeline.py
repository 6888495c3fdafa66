import time

import numpy as np
import pytest

from drawjectory.editing import Rotate, Scale, Shift
from drawjectory.exceptions import StopWithoutStart
from drawjectory.feasibility import BOUNDS, FeasibilityLimits
from drawjectory.mission import execute_mission, parse_mission
from drawjectory.pipeline import PlanRequest, PlanResult, Stopwatch, run_pipeline
from drawjectory.recording import trim_flight_path
from drawjectory.sampling import SamplingConfig
from drawjectory.serialize import dumps, plan_bundle_to_json

from conftest import circle_rows, make_path


def _circle_request(**overrides):
    path = make_path(circle_rows(400, radius=0.8, center=(2, 2, 1), period=12.0))
    fields = dict(
        flight_path=path,
        sampling=SamplingConfig("equidistant", 20),
        limits=FeasibilityLimits(),
        edits=(),
    )
    fields.update(overrides)
    return PlanRequest(**fields)


def test_circle_plan_is_feasible_and_tight():
    result = run_pipeline(_circle_request())
    assert result.feasibility.feasible
    assert result.error.mae <= 0.02
    assert len(result.control_points) > 100
    assert result.control_points[0].t == 0.0


def test_waypoints_interpolated_by_result_trajectory():
    result = run_pipeline(_circle_request())
    for p in result.waypoints.points:
        delta = result.trajectory.position(p.t) - np.array([p.x, p.y, p.z])
        assert np.linalg.norm(delta) <= 1e-9


def test_edits_outside_box_reported_infeasible():
    result = run_pipeline(_circle_request(edits=(Shift((10.0, 0.0, 0.0)),)))
    assert not result.feasibility.feasible
    assert BOUNDS in {v.kind for v in result.feasibility.violations}
    # the error report still describes the unedited plan
    assert result.error.mae <= 0.02


def test_error_is_against_unedited_plan():
    plain = run_pipeline(_circle_request())
    edited = run_pipeline(_circle_request(edits=(Rotate(0.7), Scale(1.1))))
    assert edited.error.rsme == plain.error.rsme
    assert edited.error.mae == plain.error.mae
    # while the trajectory itself did move
    assert not np.allclose(
        edited.trajectory.position(plain.trajectory.tmax),
        plain.trajectory.position(plain.trajectory.tmax),
    )


def test_pipeline_respects_trim():
    path = make_path(circle_rows(400, radius=0.8, center=(2, 2, 1), period=12.0))
    trimmed = trim_flight_path(path, 50, 250)
    result = run_pipeline(_circle_request(flight_path=trimmed))
    assert result.waypoints.points[0] == path.points[50]
    assert result.waypoints.points[-1] == path.points[250]
    assert len(result.error.series.entries) == 201


def test_pipeline_deterministic_bundles():
    request = _circle_request(
        sampling=SamplingConfig("random", 18, seed=42),
        edits=(Rotate(0.3), Shift((0.2, -0.1, 0.0))),
    )
    a = dumps(plan_bundle_to_json(request, run_pipeline(request)))
    b = dumps(plan_bundle_to_json(request, run_pipeline(request)))
    assert a == b


def test_pipeline_does_not_mutate_input():
    request = _circle_request()
    before = request.flight_path.points
    run_pipeline(request)
    assert request.flight_path.points == before


def test_mission_fed_pipeline():
    script = "start(1.5,1.5,1,0)\nmoveTo(4,1.5,1,0)\nmoveTo(4,3,1,0)"
    path = execute_mission(parse_mission(script), cruise_speed=0.5)
    result = run_pipeline(
        PlanRequest(flight_path=path, sampling=SamplingConfig("equidistant", 10))
    )
    assert result.feasibility.feasible
    assert isinstance(result, PlanResult)


def test_stopwatch_basics():
    sw = Stopwatch()
    with pytest.raises(StopWithoutStart):
        sw.stop()
    sw.start()
    assert sw.stop() >= 0.0
    sw.start()
    time.sleep(0.1)
    assert sw.stop() >= 0.1


def test_stopwatches_are_independent():
    a, b = Stopwatch(), Stopwatch()
    a.start()
    time.sleep(0.02)
    b.start()
    elapsed_b = b.stop()
    elapsed_a = a.stop()
    assert elapsed_a > elapsed_b
    with pytest.raises(StopWithoutStart):
        b.stop()
