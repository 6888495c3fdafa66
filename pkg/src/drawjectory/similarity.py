"""Similarity measures between two point sequences of possibly different
lengths: symmetric discrete Hausdorff, discrete Frechet, DTW and
length-normalized DTW.

The O(|A|*|B|) inner loops live in the compiled `_kernels` extension when it
is available; otherwise a pure-Python implementation with identical
numerical behavior is used. Set DRAWJECTORY_PURE_PYTHON=1 to force the
fallback (e.g. for benchmarking).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .exceptions import EmptySequence

if os.environ.get("DRAWJECTORY_PURE_PYTHON"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"


def backend_name() -> str:
    """Which kernel implementation was selected at import."""
    return BACKEND


@dataclass(frozen=True)
class SimilarityReport:
    hausdorff: float
    frechet: float
    dtw: float
    dtw_normalized: float


def _as_points(seq, name: str) -> np.ndarray:
    arr = np.ascontiguousarray(np.asarray(seq, dtype=float))
    if arr.ndim == 1 and arr.size == 0:
        raise EmptySequence(f"{name} is empty")
    if arr.ndim != 2:
        raise ValueError(f"{name} must be a sequence of points, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise EmptySequence(f"{name} is empty")
    return arr


def hausdorff_distance(a, b) -> float:
    """Symmetric discrete Hausdorff: max of the two directed distances."""
    pa = _as_points(a, "a")
    pb = _as_points(b, "b")
    return max(_impl.hausdorff_directed(pa, pb), _impl.hausdorff_directed(pb, pa))


def frechet_distance(a, b) -> float:
    """Discrete Frechet distance: the smallest possible maximal matched-pair
    distance over monotone couplings."""
    pa = _as_points(a, "a")
    pb = _as_points(b, "b")
    return _impl.frechet_cost(pa, pb)


def dtw_distance(a, b) -> tuple[float, float]:
    """(accumulated DTW cost, cost / max point count)."""
    pa = _as_points(a, "a")
    pb = _as_points(b, "b")
    cost = _impl.dtw_cost(pa, pb)
    return cost, cost / max(pa.shape[0], pb.shape[0])


def compare(a, b) -> SimilarityReport:
    dtw, dtw_norm = dtw_distance(a, b)
    return SimilarityReport(
        hausdorff=hausdorff_distance(a, b),
        frechet=frechet_distance(a, b),
        dtw=dtw,
        dtw_normalized=dtw_norm,
    )
