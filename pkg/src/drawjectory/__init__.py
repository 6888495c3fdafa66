"""Trajectory planning by demonstration for quadrocopters.

Record (or generate) a flight path, trim it, sample waypoints, interpolate a
natural-cubic-spline trajectory, check feasibility, edit and replan, and
measure interpolation error and trajectory similarity.
"""

from .editing import EditOp, MoveWaypoint, Rotate, Scale, Shift, apply_edit, edit_and_replan
from .error_metrics import (
    ErrorReport,
    ErrorSeries,
    aggregate_errors,
    color_scale,
    position_error_series,
)
from .feasibility import FeasibilityLimits, FeasibilityReport, check_feasibility
from .mission import execute_mission, parse_mission
from .pipeline import PlanRequest, PlanResult, Stopwatch, run_pipeline
from .recording import (
    FlightPath,
    TrackedPoint,
    effective_points,
    load_flight_path,
    save_flight_path,
    trim_flight_path,
)
from .sampling import (
    SamplingConfig,
    WaypointSet,
    sample_equidistant,
    sample_random,
    sample_waypoints,
)
from .similarity import (
    SimilarityReport,
    backend_name,
    compare,
    dtw_distance,
    frechet_distance,
    hausdorff_distance,
)
from .spline import (
    ControlPoint,
    CubicSpline1D,
    Trajectory,
    build_natural_spline_1d,
    eval_spline,
    plan_trajectory,
    sample_trajectory,
)

__version__ = "0.1.0"

__all__ = [
    "ControlPoint",
    "CubicSpline1D",
    "EditOp",
    "ErrorReport",
    "ErrorSeries",
    "FeasibilityLimits",
    "FeasibilityReport",
    "FlightPath",
    "MoveWaypoint",
    "PlanRequest",
    "PlanResult",
    "Rotate",
    "SamplingConfig",
    "Scale",
    "Shift",
    "SimilarityReport",
    "Stopwatch",
    "TrackedPoint",
    "Trajectory",
    "WaypointSet",
    "aggregate_errors",
    "apply_edit",
    "backend_name",
    "build_natural_spline_1d",
    "check_feasibility",
    "color_scale",
    "compare",
    "dtw_distance",
    "edit_and_replan",
    "effective_points",
    "eval_spline",
    "execute_mission",
    "frechet_distance",
    "hausdorff_distance",
    "load_flight_path",
    "parse_mission",
    "plan_trajectory",
    "position_error_series",
    "run_pipeline",
    "sample_equidistant",
    "sample_random",
    "sample_trajectory",
    "sample_waypoints",
    "save_flight_path",
    "trim_flight_path",
]
