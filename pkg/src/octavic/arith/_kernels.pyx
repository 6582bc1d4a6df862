# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular elimination kernels (see _kernels_py for the fallback)."""

import numpy as np

from libc.stdint cimport uint64_t, int64_t


cdef uint64_t _inv_mod(uint64_t a, uint64_t p) nogil:
    cdef int64_t t = 0, newt = 1, q, tmp
    cdef int64_t r = <int64_t>p, newr = <int64_t>(a % p)
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += <int64_t>p
    return <uint64_t>t


cdef inline uint64_t _reduce(uint64_t x, uint64_t p, double pinv) nogil:
    # x < 2**63; the float quotient is off by at most one
    cdef uint64_t q = <uint64_t>(<double>x * pinv)
    cdef int64_t r = <int64_t>(x - q * p)
    if r < 0:
        r += <int64_t>p
    elif r >= <int64_t>p:
        r -= <int64_t>p
    return <uint64_t>r


def solve_mod(uint64_t[:, ::1] m, uint64_t p):
    """Row-reduce the augmented matrix ``m`` (entries in [0, p)) in place.

    Returns ``(rank, pivots, consistent, x)``; ``x`` is the unique solution
    as a uint64 array when the system has full column rank and is
    consistent, otherwise None.
    """
    cdef Py_ssize_t rows = m.shape[0]
    cdef Py_ssize_t cols = m.shape[1] - 1
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef uint64_t inv, f, nf, tmp, acc
    cdef double pinv = 1.0 / <double>p
    cdef uint64_t *row_r
    cdef uint64_t *row_i
    pivots = []
    for c in range(cols):
        if r >= rows:
            break
        i = r
        while i < rows and m[i, c] == 0:
            i += 1
        if i == rows:
            continue
        if i != r:
            for j in range(c, cols + 1):
                tmp = m[i, j]
                m[i, j] = m[r, j]
                m[r, j] = tmp
        inv = _inv_mod(m[r, c], p)
        with nogil:
            row_r = &m[r, 0]
            for j in range(c, cols + 1):
                row_r[j] = _reduce(row_r[j] * inv, p, pinv)
            for i in range(r + 1, rows):
                row_i = &m[i, 0]
                f = row_i[c]
                if f == 0:
                    continue
                nf = p - f
                for j in range(c, cols + 1):
                    row_i[j] = _reduce(row_i[j] + nf * row_r[j], p, pinv)
        pivots.append(c)
        r += 1
    consistent = True
    for i in range(r, rows):
        if m[i, cols] != 0:
            consistent = False
            break
    if r < cols or not consistent:
        return r, pivots, consistent, None
    x = np.zeros(cols, dtype=np.uint64)
    cdef uint64_t[::1] xv = x
    with nogil:
        for k in range(cols - 1, -1, -1):
            acc = m[k, cols]
            for j in range(k + 1, cols):
                if m[k, j] != 0:
                    acc = _reduce(acc + (p - m[k, j]) * xv[j], p, pinv)
            xv[k] = acc
    return r, pivots, consistent, x
