"""Pure-Python/numpy fallback for the similarity kernels.

Used when the compiled extension is not built (or is disabled via
DRAWJECTORY_PURE_PYTHON=1). Distance rows accumulate squared differences
coordinate by coordinate in the same order as the compiled code, so both
backends agree bit for bit; the DP recurrences keep the per-cell Python loop
because the row-wise dependency cannot be vectorized without changing the
floating-point association.
"""

from __future__ import annotations

import math

import numpy as np


def _dist_row(a: np.ndarray, b: np.ndarray, i: int) -> np.ndarray:
    acc = np.zeros(b.shape[0])
    for k in range(a.shape[1]):
        diff = a[i, k] - b[:, k]
        acc = acc + diff * diff
    return np.sqrt(acc)


def dtw_cost(a: np.ndarray, b: np.ndarray) -> float:
    n, m = a.shape[0], b.shape[0]
    prev = np.full(m + 1, math.inf)
    prev[0] = 0.0
    curr = np.empty(m + 1)
    for i in range(n):
        row = _dist_row(a, b, i)
        curr[0] = math.inf
        for j in range(1, m + 1):
            best = min(prev[j], prev[j - 1], curr[j - 1])
            curr[j] = row[j - 1] + best
        prev, curr = curr, prev
    return float(prev[m])


def frechet_cost(a: np.ndarray, b: np.ndarray) -> float:
    n, m = a.shape[0], b.shape[0]
    row = _dist_row(a, b, 0)
    prev = np.maximum.accumulate(row)
    curr = np.empty(m)
    for i in range(1, n):
        row = _dist_row(a, b, i)
        curr[0] = max(prev[0], row[0])
        for j in range(1, m):
            best = min(prev[j], prev[j - 1], curr[j - 1])
            curr[j] = max(best, row[j])
        prev, curr = curr, prev
    return float(prev[m - 1])


def hausdorff_directed(a: np.ndarray, b: np.ndarray) -> float:
    cmax = 0.0
    for i in range(a.shape[0]):
        cmin = float(np.min(_dist_row(a, b, i)))
        if cmin > cmax:
            cmax = cmin
    return cmax
