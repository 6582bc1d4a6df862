"""Fallback modular elimination kernels written against numpy.

Same contract as the compiled ``_kernels.solve_mod``.
"""

import numpy as np


def _inv_mod(a, p):
    return pow(int(a), -1, int(p))


def solve_mod(m, p):
    """Row-reduce the augmented matrix ``m`` (entries in [0, p)) in place.

    Returns ``(rank, pivots, consistent, x)``; ``x`` is None unless the
    system has full column rank and is consistent.
    """
    p = np.uint64(p)
    rows, ncols = m.shape
    cols = ncols - 1
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i], c:] = m[[i, r], c:]
        inv = np.uint64(_inv_mod(m[r, c], p))
        m[r, c:] = (m[r, c:] * inv) % p
        below = m[r + 1:, c]
        idx = np.flatnonzero(below)
        if idx.size:
            idx += r + 1
            factors = (p - m[idx, c])[:, None]
            m[idx, c:] = (m[idx, c:] + factors * m[r, c:][None, :]) % p
        pivots.append(c)
        r += 1
    consistent = not np.any(m[r:, cols])
    if r < cols or not consistent:
        return r, pivots, bool(consistent), None
    x = np.zeros(cols, dtype=np.uint64)
    for k in range(cols - 1, -1, -1):
        row = m[k, k + 1:cols]
        acc = int(m[k, cols]) - int(np.sum((row * x[k + 1:]) % p))
        x[k] = acc % int(p)
    return r, pivots, True, x
