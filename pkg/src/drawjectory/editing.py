"""Waypoint edits: shift, rotate about the first waypoint in the xy-plane,
scale about the first waypoint, move a single waypoint.

Edits change positions only, never timestamps, and are followed by
replanning; an edit that makes the trajectory infeasible is reported, not
silently committed (that call is the caller's decision).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .exceptions import IndexOutOfRange
from .feasibility import FeasibilityLimits, FeasibilityReport, check_feasibility
from .sampling import WaypointSet
from .spline import Trajectory, plan_trajectory


@dataclass(frozen=True)
class Shift:
    offset: tuple[float, float, float]


@dataclass(frozen=True)
class Rotate:
    """Rotation in the xy-plane about the first waypoint; positive angles
    turn counterclockwise as seen from +z."""

    angle: float


@dataclass(frozen=True)
class Scale:
    factor: float

    def __post_init__(self):
        if self.factor <= 0:
            raise ValueError(f"scale factor must be > 0, got {self.factor}")


@dataclass(frozen=True)
class MoveWaypoint:
    waypoint_index: int
    new_position: tuple[float, float, float]


EditOp = Union[Shift, Rotate, Scale, MoveWaypoint]


def edit_op_to_json(op: EditOp) -> dict:
    if isinstance(op, Shift):
        return {"kind": "shift", "offset": list(op.offset)}
    if isinstance(op, Rotate):
        return {"kind": "rotate", "angle": op.angle}
    if isinstance(op, Scale):
        return {"kind": "scale", "factor": op.factor}
    if isinstance(op, MoveWaypoint):
        return {
            "kind": "move_waypoint",
            "waypoint_index": op.waypoint_index,
            "new_position": list(op.new_position),
        }
    raise TypeError(f"not an edit op: {op!r}")


def edit_op_from_json(obj: dict) -> EditOp:
    kind = obj.get("kind")
    if kind == "shift":
        return Shift(offset=_triple(obj["offset"]))
    if kind == "rotate":
        return Rotate(angle=float(obj["angle"]))
    if kind == "scale":
        return Scale(factor=float(obj["factor"]))
    if kind == "move_waypoint":
        return MoveWaypoint(
            waypoint_index=int(obj["waypoint_index"]),
            new_position=_triple(obj["new_position"]),
        )
    raise ValueError(f"unknown edit kind: {kind!r}")


def _triple(values) -> tuple[float, float, float]:
    x, y, z = values
    return (float(x), float(y), float(z))


def apply_edit(waypoints: WaypointSet, op: EditOp) -> WaypointSet:
    """Transform waypoint positions; timestamps are untouched. Edits compose
    by sequential application."""
    pos = waypoints.positions()
    if isinstance(op, Shift):
        pos = pos + np.asarray(op.offset, dtype=float)
    elif isinstance(op, Rotate):
        c = pos[0].copy()
        cos_a = math.cos(op.angle)
        sin_a = math.sin(op.angle)
        rel_x = pos[:, 0] - c[0]
        rel_y = pos[:, 1] - c[1]
        pos = pos.copy()
        pos[:, 0] = cos_a * rel_x - sin_a * rel_y + c[0]
        pos[:, 1] = sin_a * rel_x + cos_a * rel_y + c[1]
    elif isinstance(op, Scale):
        c = pos[0].copy()
        pos = c + op.factor * (pos - c)
    elif isinstance(op, MoveWaypoint):
        if not (0 <= op.waypoint_index < len(waypoints.points)):
            raise IndexOutOfRange(
                f"waypoint index {op.waypoint_index} outside 0..{len(waypoints.points) - 1}"
            )
        pos = pos.copy()
        pos[op.waypoint_index] = np.asarray(op.new_position, dtype=float)
    else:
        raise TypeError(f"not an edit op: {op!r}")
    return waypoints.replace_positions(pos)


def edit_and_replan(
    waypoints: WaypointSet,
    ops: Sequence[EditOp],
    limits: FeasibilityLimits,
) -> tuple[WaypointSet, Trajectory, FeasibilityReport]:
    """Apply ops in order, replan, and check feasibility. The edited set is
    returned together with the report either way; committing an infeasible
    edit is up to the caller."""
    edited = waypoints
    for op in ops:
        edited = apply_edit(edited, op)
    trajectory = plan_trajectory(edited)
    report = check_feasibility(trajectory, limits)
    return edited, trajectory, report
