import math

import numpy as np
import pytest

from drawjectory.editing import (
    MoveWaypoint,
    Rotate,
    Scale,
    Shift,
    apply_edit,
    edit_and_replan,
    edit_op_from_json,
    edit_op_to_json,
)
from drawjectory.exceptions import IndexOutOfRange
from drawjectory.feasibility import BOUNDS, FeasibilityLimits
from drawjectory.recording import TrackedPoint
from drawjectory.sampling import WaypointSet
from drawjectory.spline import plan_trajectory, sample_trajectory


def _ws(rows):
    return WaypointSet(points=tuple(TrackedPoint(*r) for r in rows))


def _random_ws(rng, n=8):
    ts = np.sort(rng.uniform(0, 10, size=n))
    while np.min(np.diff(ts)) < 0.1:
        ts = np.sort(rng.uniform(0, 10, size=n))
    pos = rng.uniform(0.5, 3.0, size=(n, 3))
    return _ws(np.column_stack([ts, pos]))


def test_identity_ops_leave_waypoints_unchanged():
    ws = _ws([(0, 1, 2, 1), (1, 2, 2, 1), (2, 2, 3, 1)])
    for op in (Rotate(0.0), Scale(1.0), Shift((0.0, 0.0, 0.0))):
        edited = apply_edit(ws, op)
        np.testing.assert_array_equal(edited.positions(), ws.positions())
        np.testing.assert_array_equal(edited.times(), ws.times())


def test_quarter_turn_about_first_waypoint():
    ws = _ws([(0, 0, 0, 1), (1, 1, 0, 1)])
    edited = apply_edit(ws, Rotate(math.pi / 2))
    np.testing.assert_allclose(edited.positions(), [[0, 0, 1], [0, 1, 1]], atol=1e-12)


def test_scale_about_first_waypoint():
    ws = _ws([(0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)])
    edited = apply_edit(ws, Scale(2.0))
    np.testing.assert_allclose(
        edited.positions(), [[1, 1, 1], [3, 1, 1], [3, 3, 1]], atol=1e-12
    )


def test_rotation_preserves_xy_distances_and_z(rng):
    ws = _random_ws(rng)
    edited = apply_edit(ws, Rotate(rng.uniform(-math.pi, math.pi)))
    a, b = ws.positions(), edited.positions()
    assert np.array_equal(a[:, 2], b[:, 2])
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            before = np.linalg.norm(a[i, :2] - a[j, :2])
            after = np.linalg.norm(b[i, :2] - b[j, :2])
            assert abs(before - after) <= 1e-9


def test_scale_multiplies_distances_to_first(rng):
    ws = _random_ws(rng)
    factor = 2.75
    edited = apply_edit(ws, Scale(factor))
    a, b = ws.positions(), edited.positions()
    for i in range(1, len(a)):
        ra = np.linalg.norm(a[i] - a[0])
        rb = np.linalg.norm(b[i] - b[0])
        assert abs(rb - factor * ra) <= 1e-9 * max(1.0, factor * ra)


def test_first_waypoint_fixed_under_rotate_and_scale(rng):
    ws = _random_ws(rng)
    for op in (Rotate(1.234), Scale(3.5)):
        edited = apply_edit(ws, op)
        np.testing.assert_array_equal(edited.positions()[0], ws.positions()[0])


def test_inverse_compositions_recover_positions(rng):
    ws = _random_ws(rng)
    offset = tuple(rng.uniform(-2, 2, size=3))
    back = apply_edit(apply_edit(ws, Shift(offset)), Shift(tuple(-v for v in offset)))
    assert np.max(np.abs(back.positions() - ws.positions())) <= 1e-9
    theta = rng.uniform(0.1, 3.0)
    back = apply_edit(apply_edit(ws, Rotate(theta)), Rotate(-theta))
    assert np.max(np.abs(back.positions() - ws.positions())) <= 1e-9


def test_move_waypoint():
    ws = _ws([(0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)])
    edited = apply_edit(ws, MoveWaypoint(1, (2.5, 1.5, 1.25)))
    np.testing.assert_allclose(edited.positions()[1], [2.5, 1.5, 1.25])
    np.testing.assert_array_equal(edited.positions()[0], ws.positions()[0])
    with pytest.raises(IndexOutOfRange):
        apply_edit(ws, MoveWaypoint(3, (0, 0, 0)))
    with pytest.raises(IndexOutOfRange):
        apply_edit(ws, MoveWaypoint(-1, (0, 0, 0)))


def test_edits_never_change_timestamps(rng):
    ws = _random_ws(rng)
    ops = [Shift((1, 0, 0)), Rotate(0.4), Scale(1.2), MoveWaypoint(2, (1, 1, 1))]
    edited = ws
    for op in ops:
        edited = apply_edit(edited, op)
        np.testing.assert_array_equal(edited.times(), ws.times())
    assert edited.source_indices is None


def test_empty_ops_replan_matches_plain_plan(rng):
    ws = _random_ws(rng)
    edited, trajectory, report = edit_and_replan(ws, [], FeasibilityLimits())
    assert edited == ws
    reference = plan_trajectory(ws)
    for s_a, s_b in ((trajectory.sx, reference.sx), (trajectory.sy, reference.sy)):
        np.testing.assert_array_equal(s_a.coefficients, s_b.coefficients)


def test_shift_outside_box_reports_bounds():
    ws = _ws([(0, 1, 1, 1), (1, 2, 1, 1), (2, 3, 1, 1)])
    _, _, report = edit_and_replan(ws, [Shift((10, 0, 0))], FeasibilityLimits())
    assert not report.feasible
    assert {v.kind for v in report.violations} == {BOUNDS}


def test_scale_multiplies_sampled_speeds(rng):
    ws = _random_ws(rng, n=6)
    factor = 1.75
    base = plan_trajectory(ws)
    scaled, trajectory, _ = edit_and_replan(ws, [Scale(factor)], FeasibilityLimits())
    for cp_a, cp_b in zip(sample_trajectory(base, 0.13), sample_trajectory(trajectory, 0.13)):
        va = np.linalg.norm(cp_a.velocity)
        vb = np.linalg.norm(cp_b.velocity)
        assert abs(vb - factor * va) <= 1e-6 * max(1.0, factor * va)


def test_edit_op_json_roundtrip():
    ops = [
        Shift((1.0, -2.0, 0.5)),
        Rotate(1.5708),
        Scale(2.0),
        MoveWaypoint(3, (1.0, 2.0, 3.0)),
    ]
    for op in ops:
        assert edit_op_from_json(edit_op_to_json(op)) == op
    assert edit_op_to_json(Rotate(1.5708)) == {"kind": "rotate", "angle": 1.5708}
    with pytest.raises(ValueError):
        edit_op_from_json({"kind": "warp"})


def test_scale_factor_must_be_positive():
    with pytest.raises(ValueError):
        Scale(0.0)
    with pytest.raises(ValueError):
        Scale(-2.0)
