"""Exact solution of linear systems over Q.

Two independent routes:

* :func:`solve_fraction_free` -- Bareiss elimination over Z, exact at every
  step; fine for small and medium systems.
* :func:`solve_modular` -- elimination modulo word-sized primes (the hot
  loop lives in the compiled kernel), Chinese remaindering and rational
  reconstruction, followed by an exact check ``A x == b`` before anything
  is returned.

Both raise :class:`InconsistentSystem` or :class:`UnderdeterminedSystem`
instead of returning a wrong answer.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import gcd, isqrt, lcm

import numpy as np

from . import kernels
from .sparse import normalize

__all__ = [
    "LinearSystemError", "InconsistentSystem", "UnderdeterminedSystem",
    "solve_linear_exact", "solve_fraction_free", "solve_modular", "solve_multimodular",
    "rational_reconstruction", "word_primes", "integer_rows",
]

log = logging.getLogger(__name__)

# primes stay below 2**31 so products of residues fit in 64 bits
PRIME_CEILING = 2 ** 31
EXCLUDED_PRIMES = (2, 3, 5, 7)


class LinearSystemError(ArithmeticError):
    pass


class InconsistentSystem(LinearSystemError):
    pass


class UnderdeterminedSystem(LinearSystemError):
    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank


def _is_probable_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def word_primes(start=PRIME_CEILING):
    """Primes below ``start`` in descending order, never 2, 3, 5 or 7."""
    n = start - 1
    while n > 7:
        if _is_probable_prime(n) and n not in EXCLUDED_PRIMES:
            yield n
        n -= 1


def rational_reconstruction(a, m):
    """The unique ``n/d`` with ``|n|, d <= sqrt(m/2)`` and ``n == a*d (mod m)``, or None."""
    a %= m
    bound = isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gcd(r1, abs(s1)) != 1:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    return Fraction(r1, s1)


def integer_rows(A, b):
    """Scale each equation by its denominators; returns integer rows ``[a_1..a_n, b]``."""
    out = []
    for row, rhs in zip(A, b):
        entries = list(row) + [rhs]
        den = 1
        for x in entries:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        if den == 1:
            out.append([int(x) for x in entries])
        else:
            out.append([int(Fraction(x) * den) for x in entries])
    return out


def _check_shape(A, b):
    if not A:
        raise ValueError("empty coefficient matrix")
    ncols = len(A[0])
    if ncols == 0:
        raise ValueError("coefficient matrix has no columns")
    if any(len(r) != ncols for r in A):
        raise ValueError("ragged coefficient matrix")
    if len(b) != len(A):
        raise ValueError("right-hand side length does not match the matrix")
    return len(A), ncols


def solve_fraction_free(A, b):
    """Bareiss elimination over Z on the augmented matrix."""
    nrows, ncols = _check_shape(A, b)
    m = integer_rows(A, b)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        rowr = m[r]
        for i in range(r + 1, nrows):
            rowi = m[i]
            a = rowi[c]
            for j in range(c + 1, ncols + 1):
                rowi[j] = (rowi[j] * p - a * rowr[j]) // prev
            rowi[c] = 0
        # rows above the pivot row are untouched, so exactness of the
        # Bareiss quotients is preserved for the remaining block
        prev = p
        pivots.append(c)
        r += 1
    if any(m[i][ncols] != 0 for i in range(r, nrows)):
        raise InconsistentSystem("inconsistent system")
    if r < ncols:
        raise UnderdeterminedSystem(f"underdetermined system (rank {r} < {ncols})", rank=r)
    x = [Fraction(0)] * ncols
    for k in range(ncols - 1, -1, -1):
        row = m[k]
        acc = Fraction(row[ncols])
        for j in range(k + 1, ncols):
            if row[j]:
                acc -= row[j] * x[j]
        x[k] = acc / row[k]
    return [normalize(v) for v in x]


def _verify(rows, x):
    """Exact check of integer rows against a rational solution."""
    den = 1
    for v in x:
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    y = [int(v * den) for v in x]
    ncols = len(x)
    for row in rows:
        s = 0
        for a, v in zip(row, y):
            if a and v:
                s += a * v
        if s != den * row[ncols]:
            return False
    return True


def solve_multimodular(ncols, residue_matrix, verify, primes=None, max_primes=200):
    """Multi-modular solve driven by a callback.

    ``residue_matrix(p)`` returns the augmented system reduced mod ``p`` as a
    C-contiguous uint64 array with ``ncols + 1`` columns; ``verify(x)`` does
    the exact check of a reconstructed candidate.  This lets callers build
    residues directly without ever materialising the big-integer matrix.
    """
    primes = iter(primes) if primes is not None else word_primes()
    modulus = 1
    residues = None
    previous = None
    deficient = 0
    used = 0
    for p in primes:
        if used >= max_primes:
            break
        used += 1
        rank, _, consistent, xp = kernels.solve_mod(residue_matrix(p), p)
        if rank == ncols and not consistent:
            # rank mod p never exceeds rank over Q, so this is a certificate
            raise InconsistentSystem("inconsistent system")
        if xp is None:
            deficient += 1
            log.debug("prime %d: rank %d of %d", p, rank, ncols)
            if deficient >= 3 and residues is None:
                raise UnderdeterminedSystem(
                    f"underdetermined system (rank {rank} < {ncols} modulo several primes)",
                    rank=rank)
            continue
        xp = [int(v) for v in xp]
        if residues is None:
            residues = xp
            modulus = p
        else:
            inv = pow(modulus, -1, p)
            residues = [r_old + modulus * (((r_p - r_old) * inv) % p)
                        for r_old, r_p in zip(residues, xp)]
            modulus *= p
        candidate = []
        for v in residues:
            q = rational_reconstruction(v, modulus)
            if q is None:
                candidate = None
                break
            candidate.append(q)
        if candidate is None:
            previous = None
            continue
        if candidate == previous and verify(candidate):
            log.debug("modular solve finished after %d primes", used)
            return [normalize(v) for v in candidate]
        previous = candidate
    raise LinearSystemError(f"modular solve did not converge after {used} primes")


def solve_modular(A, b, primes=None, max_primes=200, rows_are_integer=False):
    """Multi-modular solve with rational reconstruction and exact verification."""
    _, ncols = _check_shape(A, b)
    rows = [list(r) + [v] for r, v in zip(A, b)] if rows_are_integer else integer_rows(A, b)

    def residue_matrix(p):
        return np.array([[v % p for v in row] for row in rows], dtype=np.uint64)

    return solve_multimodular(ncols, residue_matrix, lambda x: _verify(rows, x),
                              primes=primes, max_primes=max_primes)


def solve_linear_exact(A, b, method="auto"):
    """Solve ``A x = b`` exactly over Q.

    ``method`` is ``"fraction_free"``, ``"modular"`` or ``"auto"`` (modular
    for anything larger than 40 unknowns).
    """
    if not A:
        raise ValueError("empty coefficient matrix")
    if method == "auto":
        method = "modular" if len(A[0]) > 40 else "fraction_free"
    if method == "fraction_free":
        return solve_fraction_free(A, b)
    if method == "modular":
        return solve_modular(A, b)
    raise ValueError(f"unknown method {method!r}")
