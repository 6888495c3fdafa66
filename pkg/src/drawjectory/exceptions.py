"""Exception types raised across the toolkit.

Everything derives from DrawjectoryError so callers (CLI, service) can map
any domain failure to a validation error without enumerating subclasses.
"""


class DrawjectoryError(Exception):
    """Base class for all domain errors."""


# --- recording ---

class MalformedRecord(DrawjectoryError):
    """A line of an input file has a bad field count or non-numeric value."""

    def __init__(self, line_number, detail):
        super().__init__(f"line {line_number}: {detail}")
        self.line_number = line_number
        self.detail = detail


class NonMonotoneTime(DrawjectoryError):
    """Timestamps are not strictly increasing."""


class TooFewPoints(DrawjectoryError):
    """Fewer points than the operation requires."""


class InvalidTrimRange(DrawjectoryError):
    """Trim indices out of range or reversed."""


# --- sampling ---

class TooManyWaypoints(DrawjectoryError):
    """Requested more waypoints than there are points to sample from."""


class TooFewWaypoints(DrawjectoryError):
    """Requested fewer than two waypoints."""


# --- spline ---

class NonMonotoneKnots(DrawjectoryError):
    """Knot x-values are not strictly increasing."""


class OutOfDomain(DrawjectoryError):
    """Evaluation point lies outside the spline's knot interval."""


class NonPositiveStep(DrawjectoryError):
    """Sampling step must be > 0."""


# --- error metrics ---

class TimestampOutsideDomain(DrawjectoryError):
    """A demonstration timestamp lies outside the trajectory's time span."""


class EmptySeries(DrawjectoryError):
    """Error series has no entries."""


# --- similarity ---

class EmptySequence(DrawjectoryError):
    """A point sequence passed to a similarity measure is empty."""


# --- editing ---

class IndexOutOfRange(DrawjectoryError):
    """Waypoint index outside the waypoint set."""


# --- mission scripts ---

class MissionSyntaxError(DrawjectoryError):
    """Script text does not parse."""

    def __init__(self, line, column, detail):
        super().__init__(f"line {line}, column {column}: {detail}")
        self.line = line
        self.column = column
        self.detail = detail


class UnknownCommand(MissionSyntaxError):
    """Command name is not part of the mission language."""


class ArityError(MissionSyntaxError):
    """Command called with the wrong number of arguments."""


# --- pipeline / stopwatch ---

class StopWithoutStart(DrawjectoryError):
    """Stopwatch stopped before being started."""


# --- service ---

class UnknownSession(DrawjectoryError):
    """No session with the given id."""


class InvalidState(DrawjectoryError):
    """Action not valid for the session's current state."""


class ViewUnavailable(DrawjectoryError):
    """Requested state view cannot be produced yet."""
