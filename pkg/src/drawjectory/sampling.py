"""Waypoint selection from a trimmed recording.

Two strategies: equidistant (index-equidistant, so denser recording sections
get more waypoints) and seeded random. Both always keep the first and last
point of the trimmed sequence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .exceptions import NonMonotoneTime, TooFewPoints, TooFewWaypoints, TooManyWaypoints
from .recording import TrackedPoint

# Identifier of the random-selection procedure, recorded in plan bundles so a
# sampled waypoint set can be reproduced on any build. The draw consumes only
# Random.random(), whose stream for a given seed is guaranteed stable.
RNG_ALGORITHM = "mt19937-random-partial-fisher-yates"

EQUIDISTANT = "equidistant"
RANDOM = "random"
STRATEGIES = (EQUIDISTANT, RANDOM)


@dataclass(frozen=True)
class SamplingConfig:
    strategy: str
    n: int
    seed: int = 0

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy: {self.strategy!r}")
        if self.n < 2:
            raise TooFewWaypoints(f"need n >= 2, got {self.n}")
        if self.seed < 0:
            raise ValueError(f"seed must be unsigned, got {self.seed}")


@dataclass(frozen=True)
class WaypointSet:
    """Ordered interpolation knots. `source_indices` point back into the
    trimmed sequence the set was sampled from; None for edited or
    synthetic sets."""

    points: tuple[TrackedPoint, ...]
    source_indices: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if len(self.points) < 2:
            raise TooFewPoints(f"need at least 2 waypoints, got {len(self.points)}")
        for a, b in zip(self.points, self.points[1:]):
            if b.t <= a.t:
                raise NonMonotoneTime(
                    f"waypoint times must be strictly increasing: {a.t} then {b.t}"
                )
        if self.source_indices is not None:
            if len(self.source_indices) != len(self.points):
                raise ValueError("source_indices length mismatch")
            for a, b in zip(self.source_indices, self.source_indices[1:]):
                if b <= a:
                    raise ValueError("source_indices must be strictly increasing")

    def times(self) -> np.ndarray:
        return np.array([p.t for p in self.points], dtype=float)

    def positions(self) -> np.ndarray:
        return np.array([[p.x, p.y, p.z] for p in self.points], dtype=float)

    def replace_positions(self, positions: np.ndarray) -> "WaypointSet":
        """Same timestamps, new positions; source indices no longer apply."""
        pts = tuple(
            TrackedPoint(p.t, float(q[0]), float(q[1]), float(q[2]))
            for p, q in zip(self.points, positions)
        )
        return WaypointSet(points=pts, source_indices=None)


def _round_half_up(numerator: int, denominator: int) -> int:
    # exact round-half-away-from-zero for non-negative fractions
    return (2 * numerator + denominator) // (2 * denominator)


def equidistant_indices(num_points: int, n: int) -> list[int]:
    """Index trace of the equidistant selection: step d+1 from 0 with
    d = round((num_points - n) / (n - 1)), then include the last index.

    The resulting count can deviate from n; that is inherent to the stepping
    rule and deliberately not corrected.
    """
    if n < 2:
        raise TooFewWaypoints(f"need n >= 2, got {n}")
    if n > num_points:
        raise TooManyWaypoints(f"n={n} exceeds {num_points} points")
    d = _round_half_up(num_points - n, n - 1)
    indices = []
    i = 0
    while i < num_points - 1:
        indices.append(i)
        i += d + 1
    indices.append(num_points - 1)
    return indices


def sample_equidistant(points: Sequence[TrackedPoint], n: int) -> WaypointSet:
    idx = equidistant_indices(len(points), n)
    return WaypointSet(
        points=tuple(points[i] for i in idx),
        source_indices=tuple(idx),
    )


def _draw_without_replacement(rng: random.Random, pool: list[int], k: int) -> list[int]:
    # partial Fisher-Yates driven by rng.random() only, so the selection is
    # reproducible on any Python build for a fixed seed
    pool = list(pool)
    drawn = []
    for _ in range(k):
        j = int(rng.random() * len(pool))
        if j == len(pool):  # random() can return values arbitrarily close to 1
            j -= 1
        pool[j], pool[-1] = pool[-1], pool[j]
        drawn.append(pool.pop())
    return drawn


def sample_random(points: Sequence[TrackedPoint], n: int, seed: int) -> WaypointSet:
    """First and last point plus n-2 distinct interior points drawn uniformly
    without replacement; deterministic for a fixed seed."""
    if n < 2:
        raise TooFewWaypoints(f"need n >= 2, got {n}")
    if n > len(points):
        raise TooManyWaypoints(f"n={n} exceeds {len(points)} points")
    rng = random.Random(seed)
    interior = _draw_without_replacement(rng, list(range(1, len(points) - 1)), n - 2)
    idx = sorted([0, len(points) - 1] + interior)
    return WaypointSet(
        points=tuple(points[i] for i in idx),
        source_indices=tuple(idx),
    )


def sample_waypoints(points: Sequence[TrackedPoint], config: SamplingConfig) -> WaypointSet:
    if config.strategy == EQUIDISTANT:
        return sample_equidistant(points, config.n)
    return sample_random(points, config.n, config.seed)
