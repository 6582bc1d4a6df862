"""Dense binary forms.

``coeffs[i]`` is the coefficient of ``X^i Y^(d-i)``.  Coefficients are exact
numbers (int / Fraction) or, in symbolic mode, :class:`SparsePoly` values;
everything here only needs ring operations.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .sparse import SparsePoly, normalize

__all__ = ["BinaryForm", "form_eval"]


def _is_zero(c):
    if isinstance(c, SparsePoly):
        return c.is_zero()
    return c == 0


class BinaryForm:
    """Homogeneous polynomial of degree ``d`` in X, Y with dense coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(normalize(c) if not isinstance(c, SparsePoly) else c for c in coeffs)
        if not coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        self.coeffs = coeffs

    @classmethod
    def zero(cls, degree):
        return cls((0,) * (degree + 1))

    @classmethod
    def monomial(cls, degree, xpow, coeff=1):
        c = [0] * (degree + 1)
        c[xpow] = coeff
        return cls(c)

    @classmethod
    def linear(cls, x_coeff, y_coeff):
        """The form ``x_coeff*X + y_coeff*Y``."""
        return cls((y_coeff, x_coeff))

    @classmethod
    def from_roots(cls, roots):
        """Product of linear forms ``(q*X - p*Y)`` for projective roots ``(p, q)``."""
        f = cls((1,))
        for p, q in roots:
            f = f * cls((-p, q))
        return f

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return all(_is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BinaryForm({list(self.coeffs)!r})"

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degrees")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [0] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if _is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    if _is_zero(b):
                        continue
                    out[i + j] = out[i + j] + a * b
            return BinaryForm(out)
        return BinaryForm([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return BinaryForm([other * c for c in self.coeffs])

    def __pow__(self, n):
        result = BinaryForm((1,))
        for _ in range(n):
            result = result * self
        return result

    # -- calculus and evaluation -----------------------------------------
    def derivative(self, nx, ny):
        """``d^(nx+ny) f / dX^nx dY^ny`` as a form of degree ``d - nx - ny``."""
        d = self.degree
        if nx + ny > d:
            return BinaryForm((0,))
        out = []
        for j in range(d - nx - ny + 1):
            i = j + nx
            c = self.coeffs[i]
            if _is_zero(c):
                out.append(0)
                continue
            factor = 1
            for t in range(nx):
                factor *= i - t
            for t in range(ny):
                factor *= d - i - t
            out.append(c * factor)
        return BinaryForm(out)

    def evaluate(self, x, y):
        total = 0
        d = self.degree
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                total = total + c * x ** i * y ** (d - i)
        return normalize(total) if not isinstance(total, SparsePoly) else total

    __call__ = evaluate

    def transform(self, matrix):
        """Return ``f(a*X + b*Y, c*X + d*Y)`` for ``matrix = ((a, b), (c, d))``."""
        (a, b), (c, d) = matrix
        deg = self.degree
        lx = BinaryForm.linear(a, b)
        ly = BinaryForm.linear(c, d)
        xpows = [BinaryForm((1,))]
        ypows = [BinaryForm((1,))]
        for _ in range(deg):
            xpows.append(xpows[-1] * lx)
            ypows.append(ypows[-1] * ly)
        out = BinaryForm.zero(deg)
        for i, coeff in enumerate(self.coeffs):
            if _is_zero(coeff):
                continue
            out = out + (xpows[i] * ypows[deg - i]) * coeff
        return out

    def scale(self, c):
        return BinaryForm([c * x for x in self.coeffs])

    def dehomogenize(self):
        """Coefficient list (ascending powers of x) of ``f(x, 1)``."""
        return list(self.coeffs)

    def x_degree(self):
        """Degree of ``f(x, 1)``; -1 for the zero form."""
        for i in range(self.degree, -1, -1):
            if not _is_zero(self.coeffs[i]):
                return i
        return -1

    def to_integer(self):
        """Scale by the lcm of denominators; returns ``(form, scale)``."""
        den = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                den = den * c.denominator // _gcd(den, c.denominator)
        return BinaryForm([c * den for c in self.coeffs]), den


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def form_eval(form, x, y):
    """Value of ``sum coeffs[i] x^i y^(d-i)``."""
    return form.evaluate(x, y)


def binomial_weighted(coeffs):
    """Coefficients ``C(d, i) * c_i``: turns a binomial-convention vector into plain form."""
    d = len(coeffs) - 1
    return BinaryForm([comb(d, i) * c for i, c in enumerate(coeffs)])
