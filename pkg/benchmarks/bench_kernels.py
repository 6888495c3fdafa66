"""Benchmark the compiled similarity kernels against the pure-Python
fallback on recording-sized inputs.

Usage: python benchmarks/bench_kernels.py [--points N] [--repeat K]
"""

import argparse
import time

import numpy as np

from drawjectory import _kernels_py

try:
    from drawjectory import _kernels
except ImportError:
    _kernels = None

from drawjectory.mission import execute_mission, parse_mission

SLALOM = """
start(0.5,2,1,0)
moveTo(1,2,1,0)
arcRight(24, 1,2,1, 0, 3.141592653589793, 0.5, 0.5)
arcLeft(24, 2,2,1, 0, 3.141592653589793, 0.5, 0.5)
arcRight(24, 3,2,1, 0, 3.141592653589793, 0.5, 0.5)
arcLeft(24, 4,2,1, 0, 3.141592653589793, 0.5, 0.5)
moveTo(5.5,2,1,0)
"""


def _recording(points: int) -> np.ndarray:
    path = execute_mission(parse_mission(SLALOM), cruise_speed=0.5, emit_step=0.01)
    coords = np.array([[p.x, p.y, p.z] for p in path.points])
    idx = np.linspace(0, len(coords) - 1, points).astype(int)
    return np.ascontiguousarray(coords[idx])


def _time(fn, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--points", type=int, default=1500, help="points per sequence")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = np.random.default_rng(7)
    a = _recording(args.points)
    b = np.ascontiguousarray(a + rng.normal(0, 0.02, size=a.shape))

    kernels = [("hausdorff", "hausdorff_directed"), ("frechet", "frechet_cost"), ("dtw", "dtw_cost")]
    print(f"sequences: {len(a)} x {len(b)} points, best of {args.repeat}")
    print(f"{'kernel':<10} {'python':>12} {'cython':>12} {'speedup':>9}")
    for label, attr in kernels:
        py_fn = getattr(_kernels_py, attr)
        py_t = _time(py_fn, a, b, repeat=args.repeat)
        if _kernels is None:
            print(f"{label:<10} {py_t * 1e3:>10.1f}ms {'n/a':>12} {'n/a':>9}")
            continue
        cy_fn = getattr(_kernels, attr)
        cy_t = _time(cy_fn, a, b, repeat=args.repeat)
        assert py_fn(a, b) == cy_fn(a, b), f"{label}: backends disagree"
        print(f"{label:<10} {py_t * 1e3:>10.1f}ms {cy_t * 1e3:>10.1f}ms {py_t / cy_t:>8.1f}x")


if __name__ == "__main__":
    main()
