# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for the similarity measures.

Each function mirrors its counterpart in `_kernels_py` cell for cell: same
distance accumulation order, same recurrence shape, so both backends return
bit-identical results and either can satisfy the brute-force oracles.
"""

from libc.math cimport sqrt, INFINITY

import numpy as np


cdef inline double _dist(const double[:, ::1] a, const double[:, ::1] b,
                         Py_ssize_t i, Py_ssize_t j) noexcept nogil:
    cdef double acc = 0.0
    cdef double diff
    cdef Py_ssize_t k
    for k in range(a.shape[1]):
        diff = a[i, k] - b[j, k]
        acc = acc + diff * diff
    return sqrt(acc)


def dtw_cost(const double[:, ::1] a, const double[:, ::1] b):
    """Accumulated DTW cost with steps (i-1,j), (i,j-1), (i-1,j-1)."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    cdef double[::1] prev = np.empty(m + 1)
    cdef double[::1] curr = np.empty(m + 1)
    cdef double[::1] tmp
    cdef Py_ssize_t i, j
    cdef double best

    with nogil:
        prev[0] = 0.0
        for j in range(1, m + 1):
            prev[j] = INFINITY
        for i in range(1, n + 1):
            curr[0] = INFINITY
            for j in range(1, m + 1):
                best = prev[j]
                if prev[j - 1] < best:
                    best = prev[j - 1]
                if curr[j - 1] < best:
                    best = curr[j - 1]
                curr[j] = _dist(a, b, i - 1, j - 1) + best
            tmp = prev
            prev = curr
            curr = tmp
    return float(prev[m])


def frechet_cost(const double[:, ::1] a, const double[:, ::1] b):
    """Discrete Frechet distance via the standard dynamic program."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    cdef double[::1] prev = np.empty(m)
    cdef double[::1] curr = np.empty(m)
    cdef double[::1] tmp
    cdef Py_ssize_t i, j
    cdef double best, d

    with nogil:
        prev[0] = _dist(a, b, 0, 0)
        for j in range(1, m):
            d = _dist(a, b, 0, j)
            prev[j] = prev[j - 1] if prev[j - 1] > d else d
        for i in range(1, n):
            d = _dist(a, b, i, 0)
            curr[0] = prev[0] if prev[0] > d else d
            for j in range(1, m):
                best = prev[j]
                if prev[j - 1] < best:
                    best = prev[j - 1]
                if curr[j - 1] < best:
                    best = curr[j - 1]
                d = _dist(a, b, i, j)
                curr[j] = best if best > d else d
            tmp = prev
            prev = curr
            curr = tmp
    return float(prev[m - 1])


def hausdorff_directed(const double[:, ::1] a, const double[:, ::1] b):
    """max over a of the min distance to b, with the classic early break:
    once a candidate falls below the running max, that row cannot raise it."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    cdef Py_ssize_t i, j
    cdef double cmax = 0.0
    cdef double cmin, d

    with nogil:
        for i in range(n):
            cmin = INFINITY
            for j in range(m):
                d = _dist(a, b, i, j)
                if d < cmax:
                    cmin = d
                    break
                if d < cmin:
                    cmin = d
            if cmin > cmax:
                cmax = cmin
    return float(cmax)
