"""Mission scripts: a small command language executed into a dense reference
flight path.

One command per line, `name(arg, ...)` form, `#` comments. An optional
`start(x, y, z, heading)` header places the vehicle; it defaults to
(0.5, 0.5, 0, 0). Supported commands:

    takeoff(z)                                   vertical climb to z
    land()                                       vertical descent to z = 0
    moveTo(x, y, z, psi)                         straight segment, then turn by psi
    arcLeft(n, x, y, z, phi, angle, fwd, lat)    elliptical arc curving left
    arcRight(n, x, y, z, phi, angle, fwd, lat)   same, curving right

Arcs start at the given (x, y, z) (a straight approach is inserted when the
vehicle is elsewhere), emit n waypoints equidistant in the ellipse parameter,
sweep `angle` radians, and leave the heading along the exit tangent. The
ellipse's `fwd` radius lies along the initial arc direction (heading rotated
by phi) and `lat` along its normal.

Execution densifies the command polyline at constant cruise speed into a
point every emit_step seconds, so the total duration equals path length
divided by cruise speed.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .exceptions import ArityError, MissionSyntaxError, TooFewPoints, UnknownCommand
from .recording import FlightPath, TrackedPoint

DEFAULT_START = (0.5, 0.5, 0.0, 0.0)


@dataclass(frozen=True)
class Start:
    x: float
    y: float
    z: float
    heading: float


@dataclass(frozen=True)
class Takeoff:
    z: float


@dataclass(frozen=True)
class Land:
    pass


@dataclass(frozen=True)
class MoveTo:
    x: float
    y: float
    z: float
    psi: float


@dataclass(frozen=True)
class Arc:
    n: int
    x: float
    y: float
    z: float
    phi: float
    angle: float
    forward: float
    lateral: float
    left: bool


MissionCommand = Union[Start, Takeoff, Land, MoveTo, Arc]

_LINE_RE = re.compile(r"^\s*([A-Za-z_]\w*)\s*\(\s*(.*?)\s*\)\s*$")

_ARITY = {
    "start": 4,
    "takeoff": 1,
    "land": 0,
    "moveTo": 4,
    "arcLeft": 8,
    "arcRight": 8,
}


def _parse_args(lineno: int, name: str, text: str) -> list[float]:
    if not text:
        return []
    args = []
    for part in text.split(","):
        part = part.strip()
        try:
            args.append(float(part))
        except ValueError:
            col = 1
            raise MissionSyntaxError(
                lineno, col, f"non-numeric argument {part!r} to {name}"
            ) from None
    return args


def _make_arc(lineno: int, args: list[float], left: bool) -> Arc:
    n = args[0]
    if n != int(n) or int(n) < 2:
        raise MissionSyntaxError(lineno, 1, f"arc needs integer n >= 2, got {n}")
    if args[6] <= 0 or args[7] <= 0:
        raise MissionSyntaxError(lineno, 1, "arc radii must be > 0")
    return Arc(
        n=int(n),
        x=args[1],
        y=args[2],
        z=args[3],
        phi=args[4],
        angle=args[5],
        forward=args[6],
        lateral=args[7],
        left=left,
    )


def parse_mission(text: str) -> list[MissionCommand]:
    """Parse script text into a command list. A `start` header may only be
    the first command."""
    commands: list[MissionCommand] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        match = _LINE_RE.match(line)
        if match is None:
            col = len(line) - len(line.lstrip()) + 1
            raise MissionSyntaxError(lineno, col, f"expected name(arg, ...): {line.strip()!r}")
        name = match.group(1)
        if name not in _ARITY:
            raise UnknownCommand(lineno, match.start(1) + 1, f"unknown command {name!r}")
        args = _parse_args(lineno, name, match.group(2))
        if len(args) != _ARITY[name]:
            raise ArityError(
                lineno,
                match.start(1) + 1,
                f"{name} takes {_ARITY[name]} args, got {len(args)}",
            )
        if name == "start":
            if commands:
                raise MissionSyntaxError(lineno, 1, "start() must be the first command")
            commands.append(Start(*args))
        elif name == "takeoff":
            if args[0] <= 0:
                raise MissionSyntaxError(lineno, 1, f"takeoff height must be > 0, got {args[0]}")
            commands.append(Takeoff(args[0]))
        elif name == "land":
            commands.append(Land())
        elif name == "moveTo":
            commands.append(MoveTo(*args))
        else:
            commands.append(_make_arc(lineno, args, left=(name == "arcLeft")))
    return commands


def _normalize_angle(a: float) -> float:
    r = math.atan2(math.sin(a), math.cos(a))
    if r <= -math.pi:
        r = math.pi
    return r


def _arc_vertices(pos: np.ndarray, heading: float, cmd: Arc) -> tuple[list[np.ndarray], float]:
    """Vertices along the arc (excluding its entry point) and the exit heading."""
    direction = heading + cmd.phi
    u = np.array([math.cos(direction), math.sin(direction)])
    nv = np.array([-u[1], u[0]]) if cmd.left else np.array([u[1], -u[0]])
    entry = np.array([cmd.x, cmd.y])
    center = entry + cmd.lateral * nv
    vertices = []
    for k in range(1, cmd.n):
        s = cmd.angle * k / (cmd.n - 1)
        xy = center + cmd.forward * math.sin(s) * u - cmd.lateral * math.cos(s) * nv
        vertices.append(np.array([xy[0], xy[1], cmd.z]))
    tangent = cmd.forward * math.cos(cmd.angle) * u + cmd.lateral * math.sin(cmd.angle) * nv
    exit_heading = math.atan2(tangent[1], tangent[0])
    return vertices, exit_heading


def command_vertices(commands: Sequence[MissionCommand]) -> list[np.ndarray]:
    """The command-level polyline, starting at the start position.
    Zero-length segments are skipped."""
    start = DEFAULT_START
    body = list(commands)
    if body and isinstance(body[0], Start):
        s = body.pop(0)
        start = (s.x, s.y, s.z, s.heading)
    pos = np.array(start[:3], dtype=float)
    heading = _normalize_angle(start[3])
    vertices = [pos.copy()]

    def push(target: np.ndarray) -> None:
        nonlocal pos
        if not np.array_equal(target, pos):
            vertices.append(target.copy())
            pos = target

    for cmd in body:
        if isinstance(cmd, Start):
            raise MissionSyntaxError(0, 1, "start() must be the first command")
        if isinstance(cmd, Takeoff):
            push(np.array([pos[0], pos[1], cmd.z]))
        elif isinstance(cmd, Land):
            push(np.array([pos[0], pos[1], 0.0]))
        elif isinstance(cmd, MoveTo):
            push(np.array([cmd.x, cmd.y, cmd.z]))
            heading = _normalize_angle(heading + cmd.psi)
        elif isinstance(cmd, Arc):
            push(np.array([cmd.x, cmd.y, cmd.z]))
            arc_points, heading = _arc_vertices(pos, heading, cmd)
            for p in arc_points:
                push(p)
    return vertices


def execute_mission(
    commands: Sequence[MissionCommand],
    cruise_speed: float = 0.5,
    emit_step: float = 0.01,
) -> FlightPath:
    """Run the commands and densify the resulting polyline at constant
    cruise speed, emitting a point every emit_step seconds. Command
    waypoints (arc points, segment targets) are always emitted exactly."""
    if cruise_speed <= 0:
        raise ValueError(f"cruise_speed must be > 0, got {cruise_speed}")
    if emit_step <= 0:
        raise ValueError(f"emit_step must be > 0, got {emit_step}")
    vertices = command_vertices(commands)
    if len(vertices) < 2:
        raise TooFewPoints("mission produces no motion")
    verts = np.vstack(vertices)
    seg_len = np.linalg.norm(np.diff(verts, axis=0), axis=1)
    cum = np.concatenate([[0.0], np.cumsum(seg_len)])
    total = float(cum[-1])

    step_len = cruise_speed * emit_step
    tol = 1e-9 * step_len
    count = int(math.ceil((total - tol) / step_len))
    grid = step_len * np.arange(count)
    # drop grid points that collide with an exactly-emitted vertex
    near = np.searchsorted(cum, grid)
    keep = np.ones(len(grid), dtype=bool)
    for side in (near, np.clip(near - 1, 0, len(cum) - 1)):
        keep &= np.abs(cum[side] - grid) > tol
    lengths = np.unique(np.concatenate([cum, grid[keep]]))

    points = []
    for length in lengths:
        if length >= total:
            p = verts[-1]
        else:
            i = min(int(np.searchsorted(cum, length, side="right")) - 1, len(seg_len) - 1)
            f = (length - cum[i]) / seg_len[i]
            p = (1.0 - f) * verts[i] + f * verts[i + 1]
        t = float(length / cruise_speed)
        if points and t <= points[-1].t:
            # distinct lengths can round to the same timestamp; keep the
            # later geometry (it is the exactly-emitted one at the end)
            t = points.pop().t
        points.append(TrackedPoint(t, float(p[0]), float(p[1]), float(p[2])))
    return FlightPath.from_points(points)
