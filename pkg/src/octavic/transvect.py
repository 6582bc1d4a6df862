"""Transvectants of binary forms and the covariants of an octavic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .arith.forms import BinaryForm

__all__ = ["transvection", "CovariantSet", "covariants", "TransvectionOrderError"]


class TransvectionOrderError(ValueError):
    pass


def transvection(f, g, r):
    """The r-th transvectant ``(f, g)^r``.

    ``(m-r)!(n-r)!/(n! m!) * sum_k (-1)^k C(r,k) d^r f/dX^(r-k)dY^k * d^r g/dX^k dY^(r-k)``
    with ``n = deg f`` and ``m = deg g``; the result has degree ``n + m - 2r``.
    Works for numeric and SparsePoly coefficients alike.
    """
    n, m = f.degree, g.degree
    if r < 0:
        raise TransvectionOrderError("transvection order must be non-negative")
    if r > n or r > m:
        raise TransvectionOrderError(
            f"transvection order too large: r={r} for degrees {n} and {m}")
    out_deg = n + m - 2 * r
    acc = BinaryForm.zero(out_deg)
    for k in range(r + 1):
        term = f.derivative(r - k, k) * g.derivative(k, r - k)
        w = comb(r, k) * (-1) ** k
        acc = acc + (term if w == 1 else term * w)
    scale = Fraction(factorial(m - r) * factorial(n - r), factorial(n) * factorial(m))
    return acc * scale


@dataclass(frozen=True)
class CovariantSet:
    """The covariants needed for the basic invariants (orders 8, 4, 4, 4, 4, 4, 4)."""

    g: BinaryForm
    k: BinaryForm
    h: BinaryForm
    m: BinaryForm
    n: BinaryForm
    p: BinaryForm
    q: BinaryForm


def covariants(f):
    """g=(f,f)^4, k=(f,f)^6, h=(k,k)^2, m=(f,k)^4, n=(f,h)^4, p=(g,k)^4, q=(g,h)^4."""
    if f.degree != 8:
        raise ValueError(f"expected a binary octavic, got degree {f.degree}")
    g = transvection(f, f, 4)
    k = transvection(f, f, 6)
    h = transvection(k, k, 2)
    return CovariantSet(
        g=g,
        k=k,
        h=h,
        m=transvection(f, k, 4),
        n=transvection(f, h, 4),
        p=transvection(g, k, 4),
        q=transvection(g, h, 4),
    )
