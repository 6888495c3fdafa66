"""End-to-end planning: trim -> sample -> interpolate -> edit -> check ->
report. Plus the two-button stopwatch used to time a planning session.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .editing import EditOp, edit_and_replan
from .error_metrics import ErrorReport, aggregate_errors, position_error_series
from .exceptions import StopWithoutStart
from .feasibility import FeasibilityLimits, FeasibilityReport, check_feasibility
from .recording import FlightPath, effective_points
from .sampling import SamplingConfig, WaypointSet, sample_waypoints
from .spline import ControlPoint, Trajectory, plan_trajectory, sample_trajectory


@dataclass(frozen=True)
class PlanRequest:
    flight_path: FlightPath
    sampling: SamplingConfig
    limits: FeasibilityLimits = field(default_factory=FeasibilityLimits)
    edits: tuple[EditOp, ...] = ()


@dataclass(frozen=True)
class PlanResult:
    """Outcome of one pipeline run. `waypoints`, `trajectory`, `feasibility`
    and `control_points` describe the final (possibly edited) plan; `error`
    is always the interpolation error of the unedited plan against the
    trimmed demonstration, since edits deliberately deviate from it."""

    waypoints: WaypointSet
    trajectory: Trajectory
    feasibility: FeasibilityReport
    error: ErrorReport
    control_points: tuple[ControlPoint, ...]


def run_pipeline(request: PlanRequest) -> PlanResult:
    """Deterministic for a fixed request (including the sampling seed).
    An infeasible outcome is returned, not raised; the caller decides
    whether to proceed."""
    points = effective_points(request.flight_path)
    waypoints = sample_waypoints(points, request.sampling)
    planned = plan_trajectory(waypoints)

    if request.edits:
        final_waypoints, final_trajectory, feasibility = edit_and_replan(
            waypoints, request.edits, request.limits
        )
    else:
        final_waypoints, final_trajectory = waypoints, planned
        feasibility = check_feasibility(planned, request.limits)

    error = aggregate_errors(position_error_series(points, planned))
    control_points = tuple(sample_trajectory(final_trajectory, request.limits.check_step))
    return PlanResult(
        waypoints=final_waypoints,
        trajectory=final_trajectory,
        feasibility=feasibility,
        error=error,
        control_points=control_points,
    )


class Stopwatch:
    """Wall-clock timer between two button presses. Instances are
    independent; restarting is allowed and discards the previous span."""

    def __init__(self):
        self._started_at: Optional[float] = None
        self.elapsed: Optional[float] = None

    @property
    def running(self) -> bool:
        return self._started_at is not None

    def start(self) -> None:
        self._started_at = time.perf_counter()
        self.elapsed = None

    def stop(self) -> float:
        if self._started_at is None:
            raise StopWithoutStart("stopwatch was never started")
        self.elapsed = time.perf_counter() - self._started_at
        self._started_at = None
        return self.elapsed
