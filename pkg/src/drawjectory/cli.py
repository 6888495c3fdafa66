"""Command-line interface.

Subcommands cover the whole workflow so it can be scripted end to end:
mission (generate a reference path), trim, sample, plan, edit, check,
metrics, similarity, serve. Numeric file output uses 17 significant digits,
so identical inputs always produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import serialize
from .exceptions import DrawjectoryError
from .feasibility import FeasibilityLimits
from .editing import edit_op_from_json
from .mission import execute_mission, parse_mission
from .pipeline import PlanRequest, run_pipeline
from .recording import (
    FlightPath,
    effective_points,
    format_float,
    load_flight_path,
    save_flight_path,
    trim_flight_path,
)
from .sampling import SamplingConfig, WaypointSet, sample_waypoints
from .similarity import compare

log = logging.getLogger("drawjectory")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INFEASIBLE = 2


def _configure_logging() -> None:
    level = os.environ.get("DRAWJECTORY_LOG", "error").lower()
    levels = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(
        level=levels.get(level, logging.ERROR),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_output(path: str | None, data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _infer_format(path: str, override: str | None) -> str:
    if override:
        return override
    if path.endswith(".jsonl"):
        return "jsonl"
    return "csv"


def _load_path_arg(path: str, fmt: str | None) -> FlightPath:
    return load_flight_path(_read_input(path), _infer_format(path, fmt))


def _parse_box(text: str) -> tuple[tuple[float, float, float], tuple[float, float, float]]:
    parts = [float(v) for v in text.split(",")]
    if len(parts) != 6:
        raise DrawjectoryError(f"--box needs 6 comma-separated numbers, got {len(parts)}")
    return tuple(parts[:3]), tuple(parts[3:])


def _parse_edit(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DrawjectoryError(f"--edit is not valid JSON: {exc.msg}") from None
    return edit_op_from_json(obj)


def _limits_from_args(args) -> FeasibilityLimits:
    box_min, box_max = _parse_box(args.box)
    return FeasibilityLimits(
        box_min=box_min,
        box_max=box_max,
        v_max=args.vmax,
        a_max=args.amax,
        check_step=args.step,
    )


def _add_limit_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--vmax", type=float, default=1.5, help="speed limit in m/s")
    parser.add_argument("--amax", type=float, default=None, help="optional acceleration limit in m/s^2")
    parser.add_argument(
        "--box",
        default="0,0,0,6,4,3",
        help="flight volume as xmin,ymin,zmin,xmax,ymax,zmax",
    )
    parser.add_argument("--step", type=float, default=0.01, help="check/sample step in seconds")


def _waypoints_bytes(ws: WaypointSet, fmt: str) -> bytes:
    with_index = ws.source_indices is not None
    if fmt == "csv":
        header = "t,x,y,z,index" if with_index else "t,x,y,z"
        lines = [header]
        for k, p in enumerate(ws.points):
            row = ",".join(format_float(v) for v in (p.t, p.x, p.y, p.z))
            if with_index:
                row += f",{ws.source_indices[k]}"
            lines.append(row)
        return ("\n".join(lines) + "\n").encode("utf-8")
    lines = []
    for k, p in enumerate(ws.points):
        obj = {"t": p.t, "x": p.x, "y": p.y, "z": p.z}
        if with_index:
            obj["index"] = ws.source_indices[k]
        lines.append(json.dumps(obj))
    return ("\n".join(lines) + "\n").encode("utf-8")


def cmd_mission(args) -> int:
    if args.mission_command != "run":
        raise DrawjectoryError(f"unknown mission subcommand {args.mission_command!r}")
    commands = parse_mission(_read_input(args.script).decode("utf-8"))
    path = execute_mission(commands, cruise_speed=args.cruise, emit_step=args.emit_step)
    fmt = _infer_format(args.output or "", args.format)
    _write_output(args.output, save_flight_path(path, fmt))
    return EXIT_OK


def cmd_trim(args) -> int:
    path = _load_path_arg(args.input, args.format)
    trimmed = trim_flight_path(path, args.start, args.end)
    out = FlightPath.from_points(effective_points(trimmed))
    fmt = _infer_format(args.output or args.input, args.format)
    _write_output(args.output, save_flight_path(out, fmt))
    return EXIT_OK


def cmd_sample(args) -> int:
    path = _load_path_arg(args.input, args.format)
    config = SamplingConfig(strategy=args.strategy, n=args.n, seed=args.seed)
    ws = sample_waypoints(effective_points(path), config)
    fmt = _infer_format(args.output or args.input, args.format)
    _write_output(args.output, _waypoints_bytes(ws, fmt))
    return EXIT_OK


def cmd_plan(args) -> int:
    path = _load_path_arg(args.input, args.format)
    if args.trim_start is not None or args.trim_end is not None:
        start = args.trim_start if args.trim_start is not None else 0
        end = args.trim_end if args.trim_end is not None else len(path.points) - 1
        path = trim_flight_path(path, start, end)
    request = PlanRequest(
        flight_path=path,
        sampling=SamplingConfig(strategy=args.strategy, n=args.n, seed=args.seed),
        limits=_limits_from_args(args),
        edits=tuple(_parse_edit(e) for e in args.edit),
    )
    result = run_pipeline(request)
    _write_output(args.output, serialize.dumps(serialize.plan_bundle_to_json(request, result)))
    if args.strict and not result.feasibility.feasible:
        log.info("infeasible result with --strict")
        return EXIT_INFEASIBLE
    return EXIT_OK


def _load_bundle(path: str) -> dict:
    obj = json.loads(_read_input(path).decode("utf-8"))
    if obj.get("format") != serialize.BUNDLE_FORMAT:
        raise DrawjectoryError(f"{path}: not a {serialize.BUNDLE_FORMAT} file")
    return obj


def cmd_edit(args) -> int:
    bundle = _load_bundle(args.bundle)
    edits = tuple(_parse_edit(e) for e in args.edit)
    request = serialize.plan_request_from_bundle(bundle, edits)
    result = run_pipeline(request)
    _write_output(args.output, serialize.dumps(serialize.plan_bundle_to_json(request, result)))
    if args.strict and not result.feasibility.feasible:
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_check(args) -> int:
    bundle = _load_bundle(args.bundle)
    report = bundle["feasibility"]
    _write_output(args.output, (json.dumps(report) + "\n").encode("utf-8"))
    if args.strict and not report["feasible"]:
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_metrics(args) -> int:
    bundle = _load_bundle(args.bundle)
    _write_output(args.output, (json.dumps(bundle["error"]) + "\n").encode("utf-8"))
    return EXIT_OK


def cmd_similarity(args) -> int:
    a = _load_path_arg(args.file_a, args.format_a)
    b = _load_path_arg(args.file_b, args.format_b)
    report = compare(
        [p.position for p in a.points],
        [p.position for p in b.points],
    )
    _write_output(args.output, (json.dumps(serialize.similarity_to_json(report)) + "\n").encode("utf-8"))
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import run_server

    run_server(host=args.host, port=args.port, static_dir=args.static)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drawjectory",
        description="Plan quadrocopter trajectories from demonstrated flight paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mission", help="run a mission script into a flight path")
    msub = p.add_subparsers(dest="mission_command", required=True)
    run = msub.add_parser("run", help="execute a script")
    run.add_argument("script", help="mission script file, or - for stdin")
    run.add_argument("--cruise", type=float, default=0.5, help="cruise speed in m/s")
    run.add_argument("--step", dest="emit_step", type=float, default=0.01, help="emit interval in s")
    run.add_argument("--format", choices=["csv", "jsonl"], default=None)
    run.add_argument("-o", "--output", default=None)
    run.set_defaults(func=cmd_mission)

    p = sub.add_parser("trim", help="write the trimmed slice of a recording")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--end", type=int, required=True)
    p.add_argument("--format", choices=["csv", "jsonl"], default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_trim)

    p = sub.add_parser("sample", help="select waypoints from a recording")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--strategy", choices=["equidistant", "random"], default="equidistant")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["csv", "jsonl"], default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("plan", help="plan a trajectory, write a plan bundle")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--strategy", choices=["equidistant", "random"], default="equidistant")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trim-start", type=int, default=None)
    p.add_argument("--trim-end", type=int, default=None)
    p.add_argument("--edit", action="append", default=[], help="edit op as JSON, applied in order")
    p.add_argument("--format", choices=["csv", "jsonl"], default=None)
    p.add_argument("--strict", action="store_true", help="exit 2 when the result is infeasible")
    p.add_argument("-o", "--output", default=None)
    _add_limit_flags(p)
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("edit", help="apply edits to a plan bundle and replan")
    p.add_argument("bundle", nargs="?", default="-")
    p.add_argument("--edit", action="append", default=[], required=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_edit)

    p = sub.add_parser("check", help="print the feasibility report of a bundle")
    p.add_argument("bundle", nargs="?", default="-")
    p.add_argument("--strict", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("metrics", help="print the interpolation-error report of a bundle")
    p.add_argument("bundle", nargs="?", default="-")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("similarity", help="compare two point-sequence files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--format-a", choices=["csv", "jsonl"], default=None)
    p.add_argument("--format-b", choices=["csv", "jsonl"], default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_similarity)

    p = sub.add_parser("serve", help="start the session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=7878)
    p.add_argument("--static", default=None, help="directory of UI assets to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DrawjectoryError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
