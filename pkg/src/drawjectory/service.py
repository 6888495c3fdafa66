"""Session service: a small JSON/HTTP facade over the pipeline for the
browser editor's trim / plan / edit / replan loop.

Sessions live in memory. Every applied action is recorded, and replaying a
session's history against its original upload reproduces the current plan
byte for byte (the store recomputes the pipeline from the recorded inputs
rather than mutating results in place). Actions on one session are
serialized by a per-session lock; different sessions run concurrently.
"""

from __future__ import annotations

import json
import logging
import mimetypes
import threading
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional
from urllib.parse import parse_qs, urlparse

from . import serialize
from .error_metrics import color_scale
from .exceptions import (
    DrawjectoryError,
    InvalidState,
    UnknownSession,
    ViewUnavailable,
)
from .feasibility import FeasibilityLimits
from .editing import edit_op_from_json
from .pipeline import PlanRequest, PlanResult, Stopwatch, run_pipeline
from .recording import FlightPath, effective_points, load_flight_path, trim_flight_path
from .sampling import SamplingConfig
from .similarity import compare

log = logging.getLogger("drawjectory.service")

VIEWS = ("path", "waypoints", "trajectory", "errors", "similarity")


@dataclass
class Session:
    id: str
    flight_path: FlightPath
    sampling: Optional[SamplingConfig] = None
    limits: FeasibilityLimits = field(default_factory=FeasibilityLimits)
    edits: tuple = ()
    current: Optional[PlanResult] = None
    history: list = field(default_factory=list)
    stopwatch: Stopwatch = field(default_factory=Stopwatch)
    reference: Optional[FlightPath] = None
    lock: threading.RLock = field(default_factory=threading.RLock)

    def request(self) -> PlanRequest:
        if self.sampling is None:
            raise InvalidState("no plan yet")
        return PlanRequest(
            flight_path=self.flight_path,
            sampling=self.sampling,
            limits=self.limits,
            edits=self.edits,
        )


def _summary(session: Session, committed: bool = True, candidate: Optional[PlanResult] = None,
             elapsed: Optional[float] = None) -> dict:
    result = session.current
    out = {
        "id": session.id,
        "trim": [session.flight_path.trim_start, session.flight_path.trim_end],
        "planned": result is not None,
        "committed": committed,
        "feasible": result.feasibility.feasible if result else None,
        "waypoint_count": len(result.waypoints.points) if result else None,
        "rsme": result.error.rsme if result else None,
        "mae": result.error.mae if result else None,
        "violations": [],
        "elapsed": elapsed,
    }
    report = candidate.feasibility if candidate else (result.feasibility if result else None)
    if report is not None and not report.feasible:
        out["violations"] = [serialize.violation_to_json(v) for v in report.violations]
    return out


class SessionStore:
    """All live sessions; the HTTP layer is a thin adapter over this."""

    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, body: bytes, format: str = "csv") -> Session:
        path = load_flight_path(body, format)
        session = Session(id=uuid.uuid4().hex, flight_path=path)
        with self._lock:
            self._sessions[session.id] = session
        log.info("session %s created with %d points", session.id, len(path.points))
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSession(f"no session {session_id!r}")
        return session

    def set_reference(self, session_id: str, body: bytes, format: str = "csv") -> dict:
        session = self.get(session_id)
        with session.lock:
            session.reference = load_flight_path(body, format)
            return {"id": session.id, "reference_points": len(session.reference.points)}

    def apply_action(self, session_id: str, action: dict) -> dict:
        session = self.get(session_id)
        with session.lock:
            return self._apply(session, action)

    def _apply(self, session: Session, action: dict) -> dict:
        kind = action.get("action")
        if kind == "trim":
            start, end = int(action["start"]), int(action["end"])
            session.flight_path = trim_flight_path(session.flight_path, start, end)
            # a different slice invalidates any existing plan
            session.sampling = None
            session.edits = ()
            session.current = None
            session.history.append({"action": "trim", "start": start, "end": end})
            return _summary(session)

        if kind == "plan":
            sampling = SamplingConfig(
                strategy=action.get("strategy", "equidistant"),
                n=int(action["n"]),
                seed=int(action.get("seed", 0)),
            )
            limits = (
                serialize.limits_from_json(action["limits"])
                if action.get("limits")
                else FeasibilityLimits()
            )
            session.sampling = sampling
            session.limits = limits
            session.edits = ()
            session.current = run_pipeline(session.request())
            recorded = {
                "action": "plan",
                "strategy": sampling.strategy,
                "n": sampling.n,
                "seed": sampling.seed,
            }
            if action.get("limits"):
                recorded["limits"] = serialize.limits_to_json(limits)
            session.history.append(recorded)
            return _summary(session)

        if kind == "edit":
            if session.current is None:
                raise InvalidState("edit requires a planned trajectory")
            op = edit_op_from_json(action["op"])
            candidate_edits = session.edits + (op,)
            candidate = run_pipeline(
                PlanRequest(
                    flight_path=session.flight_path,
                    sampling=session.sampling,
                    limits=session.limits,
                    edits=candidate_edits,
                )
            )
            if not candidate.feasibility.feasible:
                # not committed: report the violations, keep current state
                return _summary(session, committed=False, candidate=candidate)
            session.edits = candidate_edits
            session.current = candidate
            session.history.append({"action": "edit", "op": action["op"]})
            return _summary(session)

        if kind == "stopwatch":
            event = action.get("event")
            elapsed = None
            if event == "start":
                session.stopwatch.start()
            elif event == "stop":
                elapsed = session.stopwatch.stop()
            else:
                raise DrawjectoryError(f"unknown stopwatch event {event!r}")
            session.history.append({"action": "stopwatch", "event": event})
            return _summary(session, elapsed=elapsed)

        raise DrawjectoryError(f"unknown action {kind!r}")

    def get_state(self, session_id: str, view: str, reference: str = "input") -> dict:
        session = self.get(session_id)
        with session.lock:
            return self._view(session, view, reference)

    def _view(self, session: Session, view: str, reference: str) -> dict:
        if view == "path":
            return serialize.flight_path_to_json(session.flight_path)
        if view == "waypoints":
            self._require_plan(session)
            return serialize.waypoints_to_json(session.current.waypoints)
        if view == "trajectory":
            self._require_plan(session)
            result = session.current
            doc = serialize.trajectory_to_json(result.trajectory, result.control_points)
            doc["colors"] = [
                {"t": t, "rgb": list(rgb)} for t, rgb in color_scale(result.error)
            ]
            doc["feasibility"] = serialize.feasibility_to_json(result.feasibility)
            return doc
        if view == "errors":
            self._require_plan(session)
            return serialize.error_report_to_json(session.current.error)
        if view == "similarity":
            self._require_plan(session)
            return self._similarity_view(session, reference)
        raise ViewUnavailable(f"unknown view {view!r}")

    def _similarity_view(self, session: Session, reference: str) -> dict:
        trajectory = session.current.trajectory
        if reference == "input":
            ref_points = effective_points(session.flight_path)
            # sample the trajectory at the recording's own timestamps so a
            # spline-generated recording compares at distance zero
            ts = [p.t for p in ref_points]
        elif reference == "uploaded":
            if session.reference is None:
                raise ViewUnavailable("no reference uploaded")
            ref_points = list(session.reference.points)
            ts = [cp.t for cp in session.current.control_points]
        else:
            raise ViewUnavailable(f"unknown reference {reference!r}")
        samples = trajectory.evaluate(ts, 0)
        report = compare(samples, [p.position for p in ref_points])
        return serialize.similarity_to_json(report)

    @staticmethod
    def _require_plan(session: Session) -> None:
        if session.current is None:
            raise ViewUnavailable("no planned trajectory yet")

    def current_bundle(self, session_id: str) -> bytes:
        """Serialized current plan, used to verify history replay."""
        session = self.get(session_id)
        with session.lock:
            self._require_plan(session)
            return serialize.dumps(
                serialize.plan_bundle_to_json(session.request(), session.current)
            )

    def history(self, session_id: str) -> list:
        session = self.get(session_id)
        with session.lock:
            return list(session.history)


def replay_history(store: SessionStore, upload: bytes, history: list, format: str = "csv") -> str:
    """Create a fresh session from the original upload and re-apply a
    recorded history; returns the new session id."""
    session = store.create(upload, format)
    for action in history:
        store.apply_action(session.id, action)
    return session.id


_STATUS = {
    UnknownSession: 404,
    InvalidState: 409,
    ViewUnavailable: 409,
}


def _error_body(exc: Exception) -> bytes:
    return serialize.dumps({"error": {"kind": type(exc).__name__, "message": str(exc)}})


class _Handler(BaseHTTPRequestHandler):
    store: SessionStore
    static_dir: Optional[Path] = None
    protocol_version = "HTTP/1.1"

    def log_message(self, format, *args):  # route through logging, not stderr
        log.debug("%s - %s", self.address_string(), format % args)

    def _send(self, status: int, body: bytes, content_type: str = "application/json") -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, doc: dict) -> None:
        self._send(status, serialize.dumps(doc))

    def _fail(self, exc: Exception) -> None:
        status = 400
        for klass, code in _STATUS.items():
            if isinstance(exc, klass):
                status = code
                break
        self._send(status, _error_body(exc))

    def _body(self) -> bytes:
        length = int(self.headers.get("Content-Length", 0))
        return self.rfile.read(length) if length else b""

    def do_POST(self):
        url = urlparse(self.path)
        parts = [p for p in url.path.split("/") if p]
        query = parse_qs(url.query)
        fmt = query.get("format", ["csv"])[0]
        try:
            if parts == ["sessions"]:
                session = self.store.create(self._body(), fmt)
                self._send_json(201, {"id": session.id})
            elif len(parts) == 3 and parts[0] == "sessions" and parts[2] == "actions":
                action = json.loads(self._body().decode("utf-8"))
                self._send_json(200, self.store.apply_action(parts[1], action))
            elif len(parts) == 3 and parts[0] == "sessions" and parts[2] == "reference":
                self._send_json(200, self.store.set_reference(parts[1], self._body(), fmt))
            else:
                self._send(404, _error_body(DrawjectoryError(f"no route {url.path}")))
        except (DrawjectoryError, ValueError, KeyError, json.JSONDecodeError) as exc:
            self._fail(exc)

    def do_GET(self):
        url = urlparse(self.path)
        parts = [p for p in url.path.split("/") if p]
        query = parse_qs(url.query)
        try:
            if len(parts) == 3 and parts[0] == "sessions" and parts[2] == "state":
                view = query.get("view", ["path"])[0]
                reference = query.get("reference", ["input"])[0]
                self._send_json(200, self.store.get_state(parts[1], view, reference))
            elif len(parts) == 3 and parts[0] == "sessions" and parts[2] == "history":
                self._send(200, serialize.dumps({"history": self.store.history(parts[1])}))
            elif self.static_dir is not None:
                self._serve_static(parts)
            else:
                self._send(404, _error_body(DrawjectoryError(f"no route {url.path}")))
        except (DrawjectoryError, ValueError, KeyError) as exc:
            self._fail(exc)

    def _serve_static(self, parts: list[str]) -> None:
        rel = "/".join(parts) or "index.html"
        target = (self.static_dir / rel).resolve()
        if not str(target).startswith(str(self.static_dir.resolve())) or not target.is_file():
            self._send(404, _error_body(DrawjectoryError(f"no file {rel!r}")))
            return
        ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        self._send(200, target.read_bytes(), ctype)


def make_server(host: str = "127.0.0.1", port: int = 7878,
                static_dir: Optional[str] = None) -> ThreadingHTTPServer:
    handler = type(
        "Handler",
        (_Handler,),
        {
            "store": SessionStore(),
            "static_dir": Path(static_dir) if static_dir else None,
        },
    )
    return ThreadingHTTPServer((host, port), handler)


def run_server(host: str = "127.0.0.1", port: int = 7878, static_dir: Optional[str] = None) -> None:
    server = make_server(host, port, static_dir)
    bound = server.server_address[1]
    log.info("serving on http://%s:%d", host, bound)
    print(f"drawjectory service on http://{host}:{bound}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
