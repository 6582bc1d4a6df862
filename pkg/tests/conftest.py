import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from octavic.arith import BinaryForm, poly_derivative, poly_gcd

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# filled by tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


def octavics(bound=20):
    return st.lists(st.integers(-bound, bound), min_size=9, max_size=9).map(BinaryForm)


def unimodular(bound=3):
    """Integer matrices with determinant +-1, as products of elementary moves."""
    moves = st.lists(st.tuples(st.sampled_from("lrs"), st.integers(-bound, bound)), min_size=1, max_size=6)

    def build(ms):
        a, b, c, d = 1, 0, 0, 1
        for kind, k in ms:
            if kind == "l":
                a, b = a + k * c, b + k * d
            elif kind == "r":
                c, d = c + k * a, d + k * b
            else:
                a, b, c, d = c, d, -a, -b
        return ((a, b), (c, d))

    return moves.map(build)


def random_matrix(rng, bound=4):
    while True:
        m = ((rng.randint(-bound, bound), rng.randint(-bound, bound)),
             (rng.randint(-bound, bound), rng.randint(-bound, bound)))
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0:
            return m


def max_root_multiplicity(form):
    """Largest root multiplicity of a nonzero binary form, via gcd chains.

    The point at infinity counts deg f - deg f(x, 1); a finite root of
    multiplicity m survives in gcd(f, f', ..., f^(m-1)).
    """
    p = [Fraction(c) for c in form.coeffs]
    while p and p[-1] == 0:
        p.pop()
    at_infinity = form.degree - (len(p) - 1)
    finite = 0
    if len(p) > 1:
        g, d, finite = p, p, 1
        while True:
            d = poly_derivative(d)
            g = poly_gcd(g, d)
            if len(g) <= 1:
                break
            finite += 1
    return max(finite, at_infinity)


@pytest.fixture
def rng():
    return random.Random(20261015)
