"""The basic SL2-invariants J2..J10 of a binary octavic, the discriminant,
Shioda's normalisation and the covariance law."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith.exact import content_and_primitive, form_resultant
from .arith.forms import BinaryForm
from .arith.sparse import SparsePoly, normalize
from .transvect import covariants, transvection

__all__ = [
    "DEGREES", "SCALE", "OCTAVIC_VARIABLES", "InvariantTuple", "ShiodaTuple",
    "compute_invariants", "symbolic_invariants", "compute_discriminant",
    "shioda_invariants", "covariance_check", "raw_transvectants",
]

DEGREES = tuple(range(2, 11))
OCTAVIC_VARIABLES = tuple(f"a{i}" for i in range(9))

# J_i = SCALE[i] * (transvectant); chosen so that the J_i are primitive in Z[a0..a8]
SCALE = {
    2: Fraction(2**2 * 5 * 7),
    3: Fraction(2**4 * 5**2 * 7**3, 3),
    4: Fraction(2**9 * 3 * 7**4),
    5: Fraction(2**9 * 5 * 7**5),
    6: Fraction(2**14 * 3**2 * 7**6),
    7: Fraction(2**14 * 3 * 5 * 7**7),
    8: Fraction(2**17 * 3 * 5**2 * 7**9),
    9: Fraction(2**19 * 3**2 * 5 * 7**9),
    10: Fraction(2**22 * 3**2 * 5**2 * 7**11),
}

# Res(f_X, f_Y) = 8^6 * disc(f) for octavics
_DISCRIMINANT_SCALE = 8 ** 6


def _check_octavic(f):
    if not isinstance(f, BinaryForm):
        raise TypeError("expected a BinaryForm")
    if f.degree != 8:
        raise ValueError(f"expected a binary octavic, got degree {f.degree}")


def raw_transvectants(f):
    """The nine unscaled transvectants, keyed by degree 2..10."""
    _check_octavic(f)
    c = covariants(f)
    pairs = {
        2: (f, f, 8), 3: (f, c.g, 8), 4: (c.k, c.k, 4), 5: (c.m, c.k, 4),
        6: (c.k, c.h, 4), 7: (c.m, c.h, 4), 8: (c.p, c.h, 4), 9: (c.n, c.h, 4),
        10: (c.q, c.h, 4),
    }
    return {i: transvection(a, b, r).coeffs[0] for i, (a, b, r) in pairs.items()}


@dataclass(frozen=True)
class InvariantTuple:
    J2: Fraction
    J3: Fraction
    J4: Fraction
    J5: Fraction
    J6: Fraction
    J7: Fraction
    J8: Fraction
    J9: Fraction
    J10: Fraction
    discriminant: Fraction
    source: BinaryForm | None = field(default=None, compare=False)

    def J(self, i):
        return getattr(self, f"J{i}")

    @property
    def basic(self):
        """(J2, ..., J8)."""
        return tuple(self.J(i) for i in range(2, 9))

    @property
    def lower(self):
        """(J2, ..., J7), the algebraically independent ones."""
        return tuple(self.J(i) for i in range(2, 8))

    def as_dict(self):
        d = {f"J{i}": self.J(i) for i in DEGREES}
        d["discriminant"] = self.discriminant
        return d

    @classmethod
    def from_values(cls, values, discriminant=None, source=None):
        """Build from J2..J8 (or J2..J10); missing J9, J10 become None."""
        values = list(values)
        values += [None] * (9 - len(values))
        return cls(*[normalize(Fraction(v)) if v is not None else None for v in values],
                   discriminant=discriminant, source=source)


def compute_invariants(f):
    """J2..J10 and the discriminant of a binary octavic (exact); the zero form gives all zeros."""
    raw = raw_transvectants(f)
    values = [normalize(SCALE[i] * raw[i]) for i in DEGREES]
    # the discriminant polynomial vanishes at the zero form
    disc = 0 if f.is_zero() else compute_discriminant(f)
    return InvariantTuple(*values, discriminant=disc, source=f)


@lru_cache(maxsize=1)
def _symbolic():
    gens = SparsePoly.gens(OCTAVIC_VARIABLES)
    f = BinaryForm(gens)
    raw = raw_transvectants(f)
    out = {}
    for i in DEGREES:
        poly = raw[i] * SCALE[i]
        # the displayed scale factors already make each J_i primitive over Z
        cont, _ = content_and_primitive(poly)
        if abs(cont) != 1:
            raise AssertionError(f"J{i} has content {cont}")
        out[f"J{i}"] = poly
    return out


def symbolic_invariants():
    """J2..J10 as integer polynomials in a0..a8 (``a_i`` multiplies X^i Y^(8-i))."""
    return dict(_symbolic())


def compute_discriminant(f):
    """Discriminant of a binary octavic, computed as ``Res(f_X, f_Y) / 8^6``.

    For ``a8 != 0`` this is the usual ``(-1)^28 Res(f(x,1), f'(x,1)) / a8``; it
    is an integer polynomial in the coefficients and vanishes exactly when f
    has a repeated root in P^1 (including the point at infinity).
    """
    _check_octavic(f)
    if f.is_zero():
        raise ValueError("discriminant of the zero form")
    res = form_resultant(f.derivative(1, 0), f.derivative(0, 1))
    return normalize(Fraction(res) / _DISCRIMINANT_SCALE)


@dataclass(frozen=True)
class ShiodaTuple:
    tJ2: Fraction
    tJ3: Fraction
    tJ4: Fraction
    tJ5: Fraction
    tJ6: Fraction
    tJ7: Fraction
    tJ8: Fraction
    tJ9: Fraction
    tJ10: Fraction

    def J(self, i):
        return getattr(self, f"tJ{i}")

    def as_dict(self):
        return {f"tJ{i}": self.J(i) for i in DEGREES}


def shioda_invariants(f):
    """Shioda's normalisation: the bare transvectants, ``tJ_i = J_i / SCALE[i]``."""
    raw = raw_transvectants(f)
    return ShiodaTuple(*[normalize(raw[i]) for i in DEGREES])


def covariance_check(f, g):
    """True iff ``J_i(f o g) == det(g)^(4i) J_i(f)`` for i = 2..10."""
    (a, b), (c, d) = g
    det = a * d - b * c
    if det == 0:
        raise ValueError("singular matrix")
    before = compute_invariants(f)
    after = compute_invariants(f.transform(g))
    return all(after.J(i) == det ** (4 * i) * before.J(i) for i in DEGREES)
