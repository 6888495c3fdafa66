import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from drawjectory.recording import FlightPath, TrackedPoint


def make_path(rows):
    """FlightPath from (t, x, y, z) rows."""
    return FlightPath.from_points(TrackedPoint(*row) for row in rows)


def random_path(rng, n, scale=2.0):
    ts = np.cumsum(rng.uniform(0.005, 0.05, size=n))
    pos = rng.uniform(0.5, scale, size=(n, 3))
    return make_path(np.column_stack([ts, pos]))


def circle_rows(n=1000, radius=1.0, center=(2.0, 2.0, 1.0), period=10.0):
    rows = []
    for k in range(n):
        t = period * k / n
        angle = 2 * math.pi * k / n
        rows.append(
            (
                t,
                center[0] + radius * math.cos(angle),
                center[1] + radius * math.sin(angle),
                center[2],
            )
        )
    return rows


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)
