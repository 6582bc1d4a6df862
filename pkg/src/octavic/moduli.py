"""Multiplicity classification, absolute invariants and their fallbacks,
the moduli hypersurface test, the tau family, and the isomorphism test."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith.sparse import normalize
from .invariants import InvariantTuple, compute_invariants
from .relations import BLOCK_SCALE, BLOCKS, coefficients

__all__ = [
    "MultiplicityClass", "ModuliPoint", "IsomorphismResult", "classify_multiplicity",
    "absolute_invariants", "t_membership", "t_residual_parts", "tau_invariants", "tau_relation",
    "tau_param", "tau_param_positive", "are_isomorphic", "weighted_equivalence",
    "MULTIPLICITY4_PATTERN", "NotGenus3", "cross_products_agree",
]

SQUAREFREE = "squarefree"
AT_MOST_3 = "multiplicityAtMost3"
EXACTLY_4 = "multiplicityExactly4"
AT_LEAST_5 = "multiplicityAtLeast5"

# octavics with a root of multiplicity exactly four: J_i = c_i * r^i
MULTIPLICITY4_PATTERN = {2: 2, 3: 12, 4: 64, 5: 64, 6: 512, 7: 512, 8: 18432}

TAU_SHIFT = 2**11 * 3**9 * 5**18 * 7**12
TAU1_SCALE = 2**46 * 3**6 * 5**60 * 7**36
TAU2_SCALE = Fraction(2**4 * 5**6 * 7**3, 3**12)

# (coefficient, power of tau1, power of tau2)
TAU_RELATION = (
    (-1064211156161261718750000000000, 1, 1),
    (40353607000000000000000000, 0, 2),
    (4649919888623184000000, 0, 4),
    (-9606056659007943744, 0, 5),
    (-750282026508000000000000, 0, 3),
    (7016382605513364494808197021484375, 2, 0),
    (-19786546042268119734375000000, 1, 2),
)


class NotGenus3(ValueError):
    pass


@dataclass(frozen=True)
class MultiplicityClass:
    kind: str
    r: Fraction | None = None

    def as_dict(self):
        out = {"class": self.kind}
        if self.r is not None:
            out["r"] = self.r
        return out


def classify_multiplicity(t):
    """Decide how degenerate the octavic behind an invariant tuple is.

    Nonzero discriminant means squarefree.  If J2..J8 all vanish there is a
    root of multiplicity at least five.  A root of multiplicity exactly four
    forces ``J_i = c_i r^i`` (see MULTIPLICITY4_PATTERN) with
    ``r = J3 / (6 J2)``; anything else is a multiple root of order at most 3.
    """
    if t.discriminant != 0:
        return MultiplicityClass(SQUAREFREE)
    basic = t.basic
    if all(v == 0 for v in basic):
        return MultiplicityClass(AT_LEAST_5)
    if t.J2 != 0:
        r = normalize(Fraction(t.J3) / (6 * t.J2))
        if r != 0 and all(t.J(i) == c * r**i for i, c in MULTIPLICITY4_PATTERN.items()):
            return MultiplicityClass(EXACTLY_4, r)
    return MultiplicityClass(AT_MOST_3)


@dataclass(frozen=True)
class ModuliPoint:
    """A point of the moduli space in absolute invariants.

    ``kind`` is ``generic`` (t1..t6), ``fallbackJ2`` (i1..i6 built on J2),
    ``fallbackJ3plus`` (ratios built on the first nonzero J_k, k >= 3) or
    ``deepDegenerate`` (J2 = J3 = J4 = J5 = 0; tau1, tau2 when J6 != 0).
    """

    kind: str
    labels: tuple
    values: tuple
    invariants: InvariantTuple | None = field(default=None, compare=False)

    def as_dict(self):
        return {"kind": self.kind, "values": dict(zip(self.labels, self.values))}


def _q(x):
    return normalize(Fraction(x))


def _ratio(t, m, k):
    g = gcd(k, m)
    return _q(Fraction(t.J(m)) ** (k // g) / Fraction(t.J(k)) ** (m // g)), f"J{m}^{k // g}/J{k}^{m // g}"


def absolute_invariants(t):
    """The moduli point of an invariant tuple; every value is a weight-zero ratio."""
    j = {i: Fraction(t.J(i)) for i in range(2, 9)}
    if all(j[i] == 0 for i in range(2, 8)):
        raise NotGenus3("not a genus-3 curve: J2..J7 all vanish")
    if all(j[i] != 0 for i in (2, 3, 4, 5)):
        values = (
            j[3] ** 2 / j[2] ** 3,
            j[4] / j[2] ** 2,
            j[5] / (j[2] * j[3]),
            j[6] / (j[2] * j[4]),
            j[7] / (j[2] * j[5]),
            j[8] / j[2] ** 4,
        )
        return ModuliPoint("generic", ("t1", "t2", "t3", "t4", "t5", "t6"),
                           tuple(_q(v) for v in values), t)
    if j[2] != 0:
        values = (
            j[3] ** 2 / j[2] ** 3,
            j[4] / j[2] ** 2,
            j[5] ** 2 / j[2] ** 5,
            j[6] / j[2] ** 3,
            j[7] ** 2 / j[2] ** 7,
            j[8] / j[2] ** 4,
        )
        return ModuliPoint("fallbackJ2", ("i1", "i2", "i3", "i4", "i5", "i6"),
                           tuple(_q(v) for v in values), t)
    if all(j[i] == 0 for i in (3, 4, 5)):
        if j[6] != 0:
            tau1, tau2 = tau_invariants(t)
            return ModuliPoint("deepDegenerate", ("tau1", "tau2"), (tau1, tau2), t)
        value, label = _ratio(t, 8, 7)
        return ModuliPoint("deepDegenerate", (label,), (value,), t)
    k = next(i for i in (3, 4, 5) if j[i] != 0)
    pairs = [_ratio(t, m, k) for m in range(k + 1, 9)]
    return ModuliPoint("fallbackJ3plus", tuple(p[1] for p in pairs),
                       tuple(p[0] for p in pairs), t)


def t_residual_parts(t_values, data=None):
    """Write the relation at (t1..t6) as ``A + B s`` with ``s^2 = t1``.

    The normalisation is J2 = 1, J3 = s, J4 = t2, J5 = t3 s, J6 = t4 t2,
    J7 = t5 t3 s, J8 = t6.
    """
    data = data if data is not None else coefficients()
    t1, t2, t3, t4, t5, t6 = (Fraction(v) for v in t_values)
    # J2..J7 with the factor s stripped off the odd-weight ones
    base = (Fraction(1), Fraction(1), t2, t3, t4 * t2, t5 * t3)
    parts = [Fraction(0), Fraction(0)]
    for m, d in enumerate(BLOCKS, start=1):
        even = Fraction(0)
        odd = Fraction(0)
        for exps, c in data.block(d).items():
            v = Fraction(c)
            for b, e in zip(base, exps):
                if e:
                    v *= b ** e
            k = exps[1] + exps[3] + exps[5]
            v *= t1 ** (k // 2)
            if k % 2:
                odd += v
            else:
                even += v
        scale = BLOCK_SCALE[d] * t6 ** (5 - m)
        parts[0] += scale * even
        parts[1] += scale * odd
    parts[0] += t6 ** 5
    return normalize(parts[0]), normalize(parts[1])


def t_membership(t_values, data=None):
    """Whether (t1..t6) lies on the moduli hypersurface.

    Decided by evaluation: with the relation written as ``A + B s``,
    ``s^2 = t1``, the point is on the hypersurface iff ``A^2 - t1 B^2 = 0``.
    """
    a, b = t_residual_parts(t_values, data)
    return a * a - Fraction(t_values[0]) * b * b == 0


def tau_invariants(t):
    """(tau1, tau2) = (J7^6 / J6^7, J8^3 / J6^4) for J2 = J3 = J4 = J5 = 0."""
    if any(t.J(i) != 0 for i in (2, 3, 4, 5)):
        raise ValueError("tau invariants need J2 = J3 = J4 = J5 = 0")
    if t.J6 == 0:
        raise ValueError("tau invariants need J6 != 0")
    j6 = Fraction(t.J6)
    return _q(Fraction(t.J7) ** 6 / j6 ** 7), _q(Fraction(t.J8) ** 3 / j6 ** 4)


def tau_relation(tau1, tau2):
    """Value of the genus-0 relation between tau1 and tau2."""
    tau1, tau2 = Fraction(tau1), Fraction(tau2)
    return _q(sum(c * tau1**i * tau2**j for c, i, j in TAU_RELATION))


def tau_param(s):
    """A rational point on the tau curve for each parameter value ``s != 0``.

    Comes from cutting the restricted relation with J7^2 = u J6 J8:
    the quadratic factor is a perfect square, ``5^6 7^3 (189u - 8)^2``.
    """
    s = Fraction(s)
    if s == 0:
        raise ZeroDivisionError("parameter must be nonzero")
    w = (s + TAU_SHIFT) ** 2
    return _q(-TAU1_SCALE * w / s**5), _q(TAU2_SCALE * w / s**2)


def tau_param_positive(s):
    """Same shape as :func:`tau_param` but with a positive tau1 prefactor.

    This variant does not lie on the tau curve; it is kept so the sign can be
    checked against.
    """
    s = Fraction(s)
    w = (s + TAU_SHIFT) ** 2
    return _q(TAU1_SCALE * w / s**5), _q(TAU2_SCALE * w / s**2)


@dataclass(frozen=True)
class IsomorphismResult:
    """Outcome of the isomorphism test.

    When isomorphic, ``J_i(f1) = lam^i J_i(f2)`` for some ``lam`` with
    ``lam^step = lam_power``; ``lam`` itself is rational iff ``rational_lambda``
    is not None.
    """

    isomorphic: bool
    step: int | None = None
    lam_power: Fraction | None = None
    rational_lambda: Fraction | None = None

    def __bool__(self):
        return self.isomorphic

    def witness(self):
        if not self.isomorphic:
            return None
        return {"step": self.step, "lambda_power": self.lam_power, "lambda": self.rational_lambda}


def _bezout(values):
    """Integers c with sum c_i v_i = gcd(values)."""
    g, coeffs = values[0], [1]
    for v in values[1:]:
        # extended Euclid on (g, v)
        r0, r1, s0, s1, u0, u1 = g, v, 1, 0, 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
            u0, u1 = u1, u0 - q * u1
        coeffs = [c * s0 for c in coeffs] + [u0]
        g = r0
    return g, coeffs


def _rational_root(x, n):
    """The positive or negative rational n-th root of x, if one exists."""
    x = Fraction(x)
    if x < 0 and n % 2 == 0:
        return None
    sign = -1 if x < 0 else 1

    def iroot(m):
        lo, hi = 0, 1
        while hi ** n <= m:
            hi *= 2
        while lo < hi - 1:
            mid = (lo + hi) // 2
            if mid ** n <= m:
                lo = mid
            else:
                hi = mid
        return lo if lo ** n == m else None

    a, b = iroot(abs(x.numerator)), iroot(x.denominator)
    if a is None or b is None:
        return None
    return _q(sign * Fraction(a, b))


def weighted_equivalence(x, y, weights):
    """Decide whether ``x_i = lam^(w_i) y_i`` for some nonzero ``lam`` over the algebraic closure.

    Both vectors must have the same zero pattern.  With ``g`` the gcd of the
    weights in the support and ``sum c_i w_i = g``, any solution has
    ``lam^g = prod (x_i / y_i)^(c_i)``; the condition is that this value
    reproduces every ratio.  No roots are extracted.
    """
    x = [Fraction(v) for v in x]
    y = [Fraction(v) for v in y]
    support = [i for i, (a, b) in enumerate(zip(x, y)) if a != 0 or b != 0]
    if any(x[i] == 0 or y[i] == 0 for i in support):
        return IsomorphismResult(False)
    if not support:
        return IsomorphismResult(True, 1, Fraction(1), Fraction(1))
    ws = [weights[i] for i in support]
    g, cs = _bezout(ws)
    nu = Fraction(1)
    for i, c in zip(support, cs):
        nu *= (x[i] / y[i]) ** c
    for i in support:
        if x[i] / y[i] != nu ** (weights[i] // g):
            return IsomorphismResult(False)
    return IsomorphismResult(True, g, _q(nu), _rational_root(nu, g))


def _as_tuple(f):
    return f if isinstance(f, InvariantTuple) else compute_invariants(f)


def are_isomorphic(f1, f2):
    """Geometric isomorphism of the curves z^2 = f1 and z^2 = f2.

    Equality of (J2 : ... : J8) in weighted projective space with weights
    2..8.  Over Q this certifies isomorphism over the algebraic closure only
    (the curves may be twists of each other).
    """
    t1, t2 = _as_tuple(f1), _as_tuple(f2)
    if t1.discriminant == 0 or t2.discriminant == 0:
        raise NotGenus3("not genus-3 curves: an octavic has a repeated root")
    return weighted_equivalence(t1.basic, t2.basic, tuple(range(2, 9)))


def cross_products_agree(t1, t2):
    """The pairwise test ``J_i(1)^j J_j(2)^i == J_i(2)^j J_j(1)^i`` for all i < j.

    Necessary for weighted projective equality but weaker than
    :func:`weighted_equivalence` when roots of unity come into play.
    """
    a, b = t1.basic, t2.basic
    return all(
        Fraction(a[i]) ** (j + 2) * Fraction(b[j]) ** (i + 2)
        == Fraction(b[i]) ** (j + 2) * Fraction(a[j]) ** (i + 2)
        for i in range(7) for j in range(i + 1, 7)
    )

