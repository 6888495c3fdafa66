"""Flyability checks: flight-volume bounds and dynamic limits.

Checking is sample-based at `check_step` (default 10 ms, the tracking
cadence), not analytic: a violation between two samples of a curved segment
can be missed, which is documented behavior.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .spline import Trajectory, sample_times

BOUNDS = "bounds"
VELOCITY = "velocity"
ACCELERATION = "acceleration"

_AXES = ("x", "y", "z")


@dataclass(frozen=True)
class FeasibilityLimits:
    """Flight-volume box and dynamic bounds. Defaults match a 6 x 4 x 3 m
    tracked volume and a 1.5 m/s speed limit; there is no default a_max, so
    acceleration checking is opt-in."""

    box_min: tuple[float, float, float] = (0.0, 0.0, 0.0)
    box_max: tuple[float, float, float] = (6.0, 4.0, 3.0)
    v_max: float = 1.5
    a_max: Optional[float] = None
    check_step: float = 0.01

    def __post_init__(self):
        if not all(lo < hi for lo, hi in zip(self.box_min, self.box_max)):
            raise ValueError("box_min must be componentwise below box_max")
        if self.v_max <= 0:
            raise ValueError(f"v_max must be > 0, got {self.v_max}")
        if self.a_max is not None and self.a_max <= 0:
            raise ValueError(f"a_max must be > 0, got {self.a_max}")
        if self.check_step <= 0:
            raise ValueError(f"check_step must be > 0, got {self.check_step}")


@dataclass(frozen=True)
class Violation:
    t: float
    kind: str  # bounds | velocity | acceleration
    value: float
    limit: float
    detail: str = ""


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)


def check_feasibility(trajectory: Trajectory, limits: FeasibilityLimits) -> FeasibilityReport:
    """Sample the trajectory at check_step (final instant included) and
    record every sample outside the box, above v_max, or above a_max."""
    ts = sample_times(trajectory.t0, trajectory.tmax, limits.check_step)
    pos = trajectory.evaluate(ts, 0)
    speed = np.linalg.norm(trajectory.evaluate(ts, 1), axis=1)
    accel = None
    if limits.a_max is not None:
        accel = np.linalg.norm(trajectory.evaluate(ts, 2), axis=1)

    lo = np.asarray(limits.box_min, dtype=float)
    hi = np.asarray(limits.box_max, dtype=float)

    violations: list[Violation] = []
    for k, t in enumerate(ts):
        t = float(t)
        for axis in range(3):
            v = float(pos[k, axis])
            if v < lo[axis]:
                violations.append(
                    Violation(t, BOUNDS, v, float(lo[axis]), f"{_AXES[axis]} below minimum")
                )
            elif v > hi[axis]:
                violations.append(
                    Violation(t, BOUNDS, v, float(hi[axis]), f"{_AXES[axis]} above maximum")
                )
        if speed[k] > limits.v_max:
            violations.append(Violation(t, VELOCITY, float(speed[k]), limits.v_max))
        if accel is not None and accel[k] > limits.a_max:
            violations.append(Violation(t, ACCELERATION, float(accel[k]), limits.a_max))

    return FeasibilityReport(feasible=not violations, violations=tuple(violations))
