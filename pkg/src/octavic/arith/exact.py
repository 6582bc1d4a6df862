"""Content, primitive parts, determinants and resultants over Q."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .forms import BinaryForm
from .sparse import SparsePoly, normalize

__all__ = [
    "content", "primitive_part", "content_and_primitive",
    "determinant", "sylvester_matrix", "resultant", "form_resultant", "DegenerateResultant",
    "poly_trim", "poly_divmod", "poly_gcd", "poly_derivative",
]


class DegenerateResultant(ValueError):
    pass


def _coefficients(p):
    if isinstance(p, SparsePoly):
        return [c for _, c in p.sorted_terms()]
    if isinstance(p, BinaryForm):
        return [c for c in reversed(p.coeffs) if c != 0]
    raise TypeError(f"unsupported type {type(p).__name__}")


def content(p):
    """Positive gcd of the coefficients (a Fraction for rational input).

    The sign of the returned content is chosen so that the primitive part
    has a positive leading coefficient: for SparsePoly the leading term is
    taken in graded-lex order, for BinaryForm it is the highest power of X
    with nonzero coefficient.  Zero has content 0.
    """
    cs = _coefficients(p)
    if not cs:
        return 0
    num = 0
    den = 1
    for c in cs:
        c = Fraction(c)
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    cont = Fraction(num, den)
    if cs[0] < 0:
        cont = -cont
    return normalize(cont)


def content_and_primitive(p):
    """``(c, q)`` with ``p == c * q`` and ``q`` primitive with positive leading coefficient."""
    c = content(p)
    if c == 0:
        return 0, p
    if isinstance(p, SparsePoly):
        inv = Fraction(1) / Fraction(c)
        return c, p * inv
    return c, BinaryForm([normalize(Fraction(x) / c) for x in p.coeffs])


def primitive_part(p):
    """Divide by the content; the zero polynomial is returned unchanged."""
    return content_and_primitive(p)[1]


def determinant(matrix):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    rows = [[Fraction(x) for x in row] for row in matrix]
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    # clear denominators row by row so Bareiss runs over Z
    scale = Fraction(1)
    m = []
    for r in rows:
        den = 1
        for x in r:
            den = lcm(den, x.denominator)
        scale /= den
        m.append([int(x * den) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rowk = m[k]
        for i in range(k + 1, n):
            rowi = m[i]
            a = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - a * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return normalize(sign * m[n - 1][n - 1] * scale)


def poly_trim(p):
    p = [normalize(Fraction(c)) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def sylvester_matrix(p, q):
    """Sylvester matrix of two coefficient lists (ascending powers).

    Rows of ``p`` come first, each row listing coefficients from the highest
    power down, which gives ``Res(x - a, x - b) = a - b``.
    """
    p = poly_trim(p)
    q = poly_trim(q)
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    pd = list(reversed(p))
    qd = list(reversed(q))
    for i in range(n):
        rows.append([0] * i + pd + [0] * (size - i - m - 1))
    for i in range(m):
        rows.append([0] * i + qd + [0] * (size - i - n - 1))
    return rows


def form_resultant(f, g):
    """Resultant of two binary forms with their formal degrees (no trimming).

    Equals ``resultant(f(x,1), g(x,1))`` whenever both leading coefficients
    are nonzero, and vanishes exactly when the forms share a projective root.
    """
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        raise DegenerateResultant("degenerate resultant: both inputs are constant")
    size = m + n
    pd = list(reversed(f.coeffs))
    qd = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + pd + [0] * (size - i - m - 1))
    for i in range(m):
        rows.append([0] * i + qd + [0] * (size - i - n - 1))
    return determinant(rows)


def resultant(p, q):
    """Resultant of univariate polynomials given as ascending coefficient lists.

    Sign convention: the Sylvester determinant above, equal to
    ``lc(p)^deg q * prod q(alpha)`` over the roots ``alpha`` of ``p``.
    """
    p = poly_trim(p)
    q = poly_trim(q)
    if not p or not q:
        raise ValueError("resultant of a zero polynomial")
    m, n = len(p) - 1, len(q) - 1
    if m == 0 and n == 0:
        raise DegenerateResultant("degenerate resultant: both inputs are constant")
    if m == 0:
        return normalize(Fraction(p[0]) ** n)
    if n == 0:
        return normalize(Fraction(q[0]) ** m)
    return determinant(sylvester_matrix(p, q))


def poly_divmod(a, b):
    a = [Fraction(c) for c in poly_trim(a)]
    b = [Fraction(c) for c in poly_trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        quot[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = poly_trim(a)
        a = [Fraction(c) for c in a]
    return poly_trim(quot), poly_trim(a)


def poly_gcd(a, b):
    """Monic gcd over Q (Euclid)."""
    a = poly_trim(a)
    b = poly_trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = Fraction(a[-1])
    return [normalize(Fraction(c) / lead) for c in a]


def poly_derivative(p):
    return poly_trim([i * c for i, c in enumerate(p)][1:])
