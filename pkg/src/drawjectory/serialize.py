"""JSON forms of the domain values: the plan bundle written by the CLI and
the documents served over HTTP.

Serialization is deterministic (insertion-ordered keys, repr floats), so the
same plan always produces the same bytes.
"""

from __future__ import annotations

import json
from typing import Optional

from .editing import EditOp, edit_op_from_json, edit_op_to_json
from .error_metrics import ErrorReport, color_scale
from .feasibility import FeasibilityLimits, FeasibilityReport, Violation
from .pipeline import PlanRequest, PlanResult
from .recording import FlightPath, TrackedPoint
from .sampling import RNG_ALGORITHM, RANDOM, SamplingConfig, WaypointSet
from .similarity import SimilarityReport
from .spline import ControlPoint, Trajectory

BUNDLE_FORMAT = "drawjectory-plan"
BUNDLE_VERSION = 1


def point_to_json(p: TrackedPoint) -> dict:
    return {"t": p.t, "x": p.x, "y": p.y, "z": p.z}


def point_from_json(obj: dict) -> TrackedPoint:
    return TrackedPoint(float(obj["t"]), float(obj["x"]), float(obj["y"]), float(obj["z"]))


def flight_path_to_json(path: FlightPath) -> dict:
    return {
        "points": [point_to_json(p) for p in path.points],
        "trim_start": path.trim_start,
        "trim_end": path.trim_end,
    }


def flight_path_from_json(obj: dict) -> FlightPath:
    return FlightPath(
        points=tuple(point_from_json(p) for p in obj["points"]),
        trim_start=int(obj["trim_start"]),
        trim_end=int(obj["trim_end"]),
    )


def waypoints_to_json(ws: WaypointSet) -> dict:
    return {
        "points": [point_to_json(p) for p in ws.points],
        "source_indices": list(ws.source_indices) if ws.source_indices is not None else None,
    }


def waypoints_from_json(obj: dict) -> WaypointSet:
    indices = obj.get("source_indices")
    return WaypointSet(
        points=tuple(point_from_json(p) for p in obj["points"]),
        source_indices=tuple(int(i) for i in indices) if indices is not None else None,
    )


def sampling_to_json(config: SamplingConfig) -> dict:
    out = {"strategy": config.strategy, "n": config.n}
    if config.strategy == RANDOM:
        out["seed"] = config.seed
        out["rng"] = RNG_ALGORITHM
    return out


def sampling_from_json(obj: dict) -> SamplingConfig:
    return SamplingConfig(
        strategy=obj["strategy"],
        n=int(obj["n"]),
        seed=int(obj.get("seed", 0)),
    )


def limits_to_json(limits: FeasibilityLimits) -> dict:
    return {
        "box_min": list(limits.box_min),
        "box_max": list(limits.box_max),
        "v_max": limits.v_max,
        "a_max": limits.a_max,
        "check_step": limits.check_step,
    }


def limits_from_json(obj: dict) -> FeasibilityLimits:
    return FeasibilityLimits(
        box_min=tuple(float(v) for v in obj["box_min"]),
        box_max=tuple(float(v) for v in obj["box_max"]),
        v_max=float(obj["v_max"]),
        a_max=float(obj["a_max"]) if obj.get("a_max") is not None else None,
        check_step=float(obj["check_step"]),
    )


def control_point_to_json(cp: ControlPoint) -> dict:
    return {
        "t": cp.t,
        "p": list(cp.position),
        "v": list(cp.velocity),
        "a": list(cp.acceleration),
    }


def trajectory_to_json(trajectory: Trajectory, samples: tuple[ControlPoint, ...]) -> dict:
    segments = {}
    for name, spline in (("x", trajectory.sx), ("y", trajectory.sy), ("z", trajectory.sz)):
        segments[name] = [
            {"a": float(a), "b": float(b), "c": float(c), "d": float(d)}
            for a, b, c, d in spline.coefficients
        ]
    return {
        "knots": [float(k) for k in trajectory.knots],
        "segments": segments,
        "samples": [control_point_to_json(cp) for cp in samples],
    }


def violation_to_json(v: Violation) -> dict:
    return {"t": v.t, "kind": v.kind, "value": v.value, "limit": v.limit, "detail": v.detail}


def feasibility_to_json(report: FeasibilityReport) -> dict:
    return {
        "feasible": report.feasible,
        "violations": [violation_to_json(v) for v in report.violations],
    }


def error_report_to_json(report: ErrorReport) -> dict:
    return {
        "rsme": report.rsme,
        "mae": report.mae,
        "series": [
            {"t": e.t, "e": list(e.e), "norm": e.norm} for e in report.series.entries
        ],
        "normalized": list(report.normalized),
        "colors": [list(rgb) for _, rgb in color_scale(report)],
    }


def similarity_to_json(report: SimilarityReport) -> dict:
    return {
        "hausdorff": report.hausdorff,
        "frechet": report.frechet,
        "dtw": report.dtw,
        "dtw_normalized": report.dtw_normalized,
    }


def edits_to_json(edits: tuple[EditOp, ...]) -> list:
    return [edit_op_to_json(op) for op in edits]


def edits_from_json(items) -> tuple[EditOp, ...]:
    return tuple(edit_op_from_json(obj) for obj in items)


def plan_bundle_to_json(request: PlanRequest, result: PlanResult) -> dict:
    return {
        "format": BUNDLE_FORMAT,
        "version": BUNDLE_VERSION,
        "request": {
            "sampling": sampling_to_json(request.sampling),
            "limits": limits_to_json(request.limits),
            "edits": edits_to_json(request.edits),
        },
        "flight_path": flight_path_to_json(request.flight_path),
        "waypoints": waypoints_to_json(result.waypoints),
        "trajectory": trajectory_to_json(result.trajectory, result.control_points),
        "feasibility": feasibility_to_json(result.feasibility),
        "error": error_report_to_json(result.error),
    }


def plan_request_from_bundle(obj: dict, edits: Optional[tuple[EditOp, ...]] = None) -> PlanRequest:
    """Rebuild the request recorded in a bundle, optionally with extra edits
    appended; the caller replans from it."""
    if obj.get("format") != BUNDLE_FORMAT:
        raise ValueError(f"not a {BUNDLE_FORMAT} file")
    req = obj["request"]
    previous = edits_from_json(req.get("edits", []))
    return PlanRequest(
        flight_path=flight_path_from_json(obj["flight_path"]),
        sampling=sampling_from_json(req["sampling"]),
        limits=limits_from_json(req["limits"]),
        edits=previous + (edits or ()),
    )


def dumps(obj: dict) -> bytes:
    return (json.dumps(obj) + "\n").encode("utf-8")
