"""Recorded flight paths: ingestion, validation, trimming, persistence.

A flight path is the timestamped 3D point sequence produced by tracking the
gesture wand (or generated from a mission script). Trimming is
non-destructive: it marks effective start/end indices so the user can re-trim
later, and everything downstream only sees the effective slice.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import IO, Iterable, Union

from .exceptions import (
    InvalidTrimRange,
    MalformedRecord,
    NonMonotoneTime,
    TooFewPoints,
)

CSV_HEADER = "t,x,y,z"


@dataclass(frozen=True)
class TrackedPoint:
    """One tracked sample: timestamp in seconds, position in meters."""

    t: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("t", "x", "y", "z"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise MalformedRecord(0, f"non-finite {name}: {v!r}")

    @property
    def position(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class FlightPath:
    """Ordered tracked points plus non-destructive trim bounds."""

    points: tuple[TrackedPoint, ...]
    trim_start: int
    trim_end: int

    def __post_init__(self):
        if len(self.points) < 2:
            raise TooFewPoints(f"need at least 2 points, got {len(self.points)}")
        for a, b in zip(self.points, self.points[1:]):
            if b.t <= a.t:
                raise NonMonotoneTime(
                    f"timestamps must be strictly increasing: {a.t} then {b.t}"
                )
        last = len(self.points) - 1
        if not (0 <= self.trim_start < self.trim_end <= last):
            raise InvalidTrimRange(
                f"trim [{self.trim_start}, {self.trim_end}] invalid for {len(self.points)} points"
            )

    @classmethod
    def from_points(cls, points: Iterable[TrackedPoint]) -> "FlightPath":
        pts = tuple(points)
        if len(pts) < 2:
            raise TooFewPoints(f"need at least 2 points, got {len(pts)}")
        return cls(points=pts, trim_start=0, trim_end=len(pts) - 1)

    @property
    def duration(self) -> float:
        return self.points[-1].t - self.points[0].t


def effective_points(path: FlightPath) -> list[TrackedPoint]:
    """The trimmed slice points[trim_start ..= trim_end], order preserved."""
    return list(path.points[path.trim_start : path.trim_end + 1])


def trim_flight_path(path: FlightPath, start_index: int, end_index: int) -> FlightPath:
    """Mark a new effective range. Points outside it are ignored downstream
    but kept so the range can be changed again."""
    last = len(path.points) - 1
    if not (0 <= start_index < end_index <= last):
        raise InvalidTrimRange(
            f"trim [{start_index}, {end_index}] invalid for {len(path.points)} points"
        )
    return FlightPath(points=path.points, trim_start=start_index, trim_end=end_index)


def _parse_float(line_number: int, field: str, text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise MalformedRecord(line_number, f"non-numeric {field}: {text!r}") from None
    if not math.isfinite(value):
        raise MalformedRecord(line_number, f"non-finite {field}: {text!r}")
    return value


def _decode(source: Union[bytes, str, IO]) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def load_flight_path(source: Union[bytes, str, IO], format: str = "csv") -> FlightPath:
    """Parse a saved recording. `format` is "csv" or "jsonl".

    CSV: header line exactly `t,x,y,z`, one record per line.
    JSONL: one object per line with keys t,x,y,z; unknown keys (e.g. a
    recorded orientation quaternion) are ignored.
    """
    text = _decode(source)
    if format == "csv":
        points = _load_csv(text)
    elif format == "jsonl":
        points = _load_jsonl(text)
    else:
        raise ValueError(f"unknown format: {format!r}")
    if len(points) < 2:
        raise TooFewPoints(f"need at least 2 points, got {len(points)}")
    return FlightPath.from_points(points)


def _load_csv(text: str) -> list[TrackedPoint]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != CSV_HEADER:
        raise MalformedRecord(1, f"expected header {CSV_HEADER!r}")
    points = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != 4:
            raise MalformedRecord(lineno, f"expected 4 fields, got {len(fields)}")
        t, x, y, z = (
            _parse_float(lineno, name, f.strip())
            for name, f in zip(("t", "x", "y", "z"), fields)
        )
        _append_monotone(points, TrackedPoint(t, x, y, z))
    return points


def _load_jsonl(text: str) -> list[TrackedPoint]:
    points = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedRecord(lineno, f"bad JSON: {exc.msg}") from None
        if not isinstance(obj, dict):
            raise MalformedRecord(lineno, "expected an object per line")
        values = []
        for key in ("t", "x", "y", "z"):
            if key not in obj:
                raise MalformedRecord(lineno, f"missing key {key!r}")
            v = obj[key]
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise MalformedRecord(lineno, f"non-numeric {key}: {v!r}")
            if not math.isfinite(v):
                raise MalformedRecord(lineno, f"non-finite {key}: {v!r}")
            values.append(float(v))
        _append_monotone(points, TrackedPoint(*values))
    return points


def _append_monotone(points: list[TrackedPoint], point: TrackedPoint) -> None:
    if points and point.t <= points[-1].t:
        raise NonMonotoneTime(
            f"timestamps must be strictly increasing: {points[-1].t} then {point.t}"
        )
    points.append(point)


def format_float(value: float) -> str:
    """17 significant digits: decimal text that round-trips the exact float."""
    return format(value, ".17g")


def save_flight_path(path: FlightPath, format: str = "csv") -> bytes:
    """Serialize all points (trim bounds are not persisted) so that loading
    the output reproduces every numeric field exactly."""
    if format == "csv":
        lines = [CSV_HEADER]
        for p in path.points:
            lines.append(
                ",".join(format_float(v) for v in (p.t, p.x, p.y, p.z))
            )
        return ("\n".join(lines) + "\n").encode("utf-8")
    if format == "jsonl":
        lines = [
            json.dumps({"t": p.t, "x": p.x, "y": p.y, "z": p.z})
            for p in path.points
        ]
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown format: {format!r}")
