import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from octavic.arith import (
    BinaryForm, DegenerateResultant, InconsistentSystem, ParseError, SparsePoly,
    UnderdeterminedSystem, content, content_and_primitive, determinant, form_eval, form_resultant,
    poly_gcd, primitive_part, rational_reconstruction, resultant, solve_fraction_free,
    solve_linear_exact, solve_modular, word_primes,
)
from octavic.arith import _kernels_py, kernels

AB = ("a", "b")


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


# -- forms and evaluation ---------------------------------------------------

def test_form_eval_basics():
    assert form_eval(BinaryForm.monomial(8, 8), 1, 0) == 1
    assert form_eval(BinaryForm.zero(8), Fraction(3, 7), -2) == 0
    assert form_eval(BinaryForm([1, 0, 1]), 3, 4) == 25


def test_form_transform_matches_substitution():
    f = BinaryForm([1, -2, 0, 5])
    g = f.transform(((2, 1), (-1, 3)))
    for x, y in [(1, 0), (0, 1), (2, -3), (Fraction(1, 2), 5)]:
        assert g.evaluate(x, y) == f.evaluate(2 * x + y, -x + 3 * y)


def test_binary_form_from_roots_vanishes_at_roots():
    f = BinaryForm.from_roots([(1, 2), (3, 1), (1, 0)])
    assert f.degree == 3
    for p, q in [(1, 2), (3, 1), (1, 0)]:
        assert f.evaluate(p, q) == 0


# -- primitive parts --------------------------------------------------------

def test_primitive_part_examples():
    p = SparsePoly.from_text("6*a^2 - 4*b", AB)
    assert primitive_part(p) == SparsePoly.from_text("3*a^2 - 2*b", AB)
    q = SparsePoly.from_text("3*a^2 - 2*b", AB)
    assert primitive_part(q) == q
    c, r = content_and_primitive(SparsePoly.from_text("-3*a", AB))
    assert (c, r) == (-3, SparsePoly.from_text("a", AB))


def test_primitive_part_of_zero_is_zero():
    z = SparsePoly.zero(AB)
    assert primitive_part(z) == z
    assert content(z) == 0


def test_primitive_part_of_form_fixes_sign_on_top_coefficient():
    c, f = content_and_primitive(BinaryForm([4, 0, -6]))
    assert c == -2 and f == BinaryForm([-2, 0, 3])


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                       st.integers(-60, 60).filter(bool), min_size=1, max_size=6))
def test_primitive_part_idempotent_and_reconstructs(terms):
    p = SparsePoly(AB, terms)
    c, q = content_and_primitive(p)
    assert q * c == p
    assert primitive_part(q) == q
    assert content(q) == 1


# -- exact rationals --------------------------------------------------------

def test_rational_addition_identity_on_random_pairs():
    rng = random.Random(1)
    for _ in range(10_000):
        a, c = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        b, d = rng.randint(1, 10**6), rng.randint(1, 10**6)
        assert (Fraction(a, b) + Fraction(c, d)) * b * d == a * d + c * b


# -- resultants -------------------------------------------------------------

def test_resultant_common_root():
    assert resultant([-1, 1], [-1, 1]) == 0


def test_resultant_linear_sign_convention():
    # Res(x - a, x - b) = a - b with p's rows first
    assert resultant([-2, 1], [-3, 1]) == -1
    assert resultant([-3, 1], [-2, 1]) == 1


def test_resultant_hand_expanded_sylvester():
    # | 1 0 -1 |
    # | 2 0  0 |  = 1*(0*0 - 0*2) - 0 + (-1)*(2*2 - 0*0) = -4
    # | 0 2  0 |
    assert resultant([-1, 0, 1], [0, 2]) == -4
    assert determinant([[1, 0, -1], [2, 0, 0], [0, 2, 0]]) == -4


def test_resultant_constant_inputs():
    with pytest.raises(DegenerateResultant, match="degenerate resultant"):
        resultant([3], [5])
    assert resultant([2], [1, 0, 1]) == 4
    with pytest.raises(ValueError):
        resultant([], [1, 1])


def test_resultant_zero_iff_common_factor():
    rng = random.Random(7)
    for trial in range(500):
        common = [rng.randint(-5, 5), rng.choice([-2, -1, 1, 2])]
        p = [rng.randint(-6, 6) for _ in range(rng.randint(2, 4))] + [rng.choice([1, 2, -3])]
        q = [rng.randint(-6, 6) for _ in range(rng.randint(2, 3))] + [rng.choice([1, -1, 4])]
        if trial % 2 == 0:
            p, q = poly_mul(p, common), poly_mul(q, common)
        shares = len(poly_gcd(p, q)) > 1
        assert (resultant(p, q) == 0) == shares


def test_form_resultant_sees_root_at_infinity():
    # both forms vanish at (1 : 0): no Y^0 X^deg term
    f = BinaryForm([1, 1, 0])
    g = BinaryForm([2, 3, 0])
    assert form_resultant(f, g) == 0
    assert form_resultant(BinaryForm([1, 0, 1]), BinaryForm([0, 1])) != 0


def test_determinant_matches_permutation_expansion():
    from itertools import permutations

    rng = random.Random(3)
    for n in (1, 2, 3, 4):
        m = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
        total = Fraction(0)
        for perm in permutations(range(n)):
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            term = Fraction((-1) ** inv)
            for i, j in enumerate(perm):
                term *= m[i][j]
            total += term
        assert determinant(m) == total


# -- linear systems ---------------------------------------------------------

def test_identity_system():
    b = [Fraction(1, 2), 3, -7]
    eye = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert solve_linear_exact(eye, b) == b


def test_two_by_two():
    assert solve_linear_exact([[1, 1], [1, -1]], [3, 1]) == [2, 1]


def _gauss(A, b):
    """Plain Gauss-Jordan over Fractions; independent of the library."""
    n = len(A)
    m = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(A, b)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n] for row in m]


def test_random_50_by_50_two_paths_agree():
    rng = random.Random(11)
    A = [[rng.randint(-20, 20) for _ in range(50)] for _ in range(50)]
    b = [rng.randint(-20, 20) for _ in range(50)]
    expected = _gauss(A, b)
    assert solve_fraction_free(A, b) == expected
    assert solve_modular(A, b) == expected
    assert solve_linear_exact(A, b) == expected


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n + 2, max_size=n + 2),
    st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=n, max_size=n))))
def test_modular_agrees_with_fraction_free(system):
    A, x = system
    b = [sum(Fraction(a) * v for a, v in zip(row, x)) for row in A]
    try:
        exact = solve_fraction_free(A, b)
    except UnderdeterminedSystem:
        with pytest.raises(UnderdeterminedSystem):
            solve_modular(A, b)
        return
    assert exact == x
    assert solve_modular(A, b) == exact


def test_inconsistent_reported_not_answered():
    A = [[1, 1], [1, 1], [1, -1]]
    b = [1, 2, 0]
    with pytest.raises(InconsistentSystem):
        solve_fraction_free(A, b)
    with pytest.raises(InconsistentSystem):
        solve_modular(A, b)


def test_underdetermined_reported():
    with pytest.raises(UnderdeterminedSystem):
        solve_fraction_free([[1, 2], [2, 4]], [1, 2])
    with pytest.raises(UnderdeterminedSystem):
        solve_modular([[1, 2], [2, 4]], [1, 2])


def test_word_primes_avoid_small_characteristics():
    ps = []
    for p in word_primes():
        ps.append(p)
        if len(ps) == 5:
            break
    assert all(p < 2**31 for p in ps)
    assert ps == sorted(ps, reverse=True)
    assert list(word_primes(12)) == [11]


def test_rational_reconstruction_round_trip():
    m = 2147483629 * 2147483587
    for q in [Fraction(3, 7), Fraction(-123456, 789), Fraction(0), Fraction(5)]:
        a = q.numerator * pow(q.denominator, -1, m) % m
        assert rational_reconstruction(a, m) == q


def test_kernel_backends_agree():
    rng = np.random.default_rng(0)
    p = 2147483629
    for n in (5, 40, 120):
        a = rng.integers(0, p, size=(n + 3, n), dtype=np.uint64)
        x = rng.integers(0, p, size=n, dtype=np.uint64)
        b = ((a.astype(object) @ x.astype(object)) % p).astype(np.uint64)
        m = np.ascontiguousarray(np.column_stack([a, b]))
        fast = kernels.solve_mod(m.copy(), p)
        slow = _kernels_py.solve_mod(m.copy(), p)
        assert fast[0] == slow[0] == n
        assert np.array_equal(fast[3], x) and np.array_equal(slow[3], x)


def test_kernel_reports_inconsistency():
    p = 1000003
    m = np.array([[1, 1, 1], [1, 1, 2], [1, 0, 0]], dtype=np.uint64)
    for solve in (kernels.solve_mod, _kernels_py.solve_mod):
        rank, _, consistent, x = solve(m.copy(), p)
        assert rank == 2 and not consistent and x is None


# -- sparse polynomial text format ------------------------------------------

def test_sparse_text_round_trip():
    text = "-2151296*a^4 + 514500*a^2*c + 3/7*b - 5"
    p = SparsePoly.from_text(text, ("a", "b", "c"))
    assert SparsePoly.from_text(p.to_text(), ("a", "b", "c")) == p
    assert SparsePoly.from_text(p.to_text(one_term_per_line=True), ("a", "b", "c")) == p
    assert p.coefficient((0, 1, 0)) == Fraction(3, 7)


def test_sparse_text_is_whitespace_insensitive_and_skips_comments():
    a = SparsePoly.from_text("3*a^2*b-b", AB)
    b = SparsePoly.from_text("# note\n  3 * a ^ 2 * b\n  - b  # trailing\n", AB)
    assert a == b


@pytest.mark.parametrize("text", ["3*a^", "2**a", "a^b", "3*z", "+"])
def test_sparse_parse_errors(text):
    with pytest.raises(ParseError):
        SparsePoly.from_text(text, AB)


def test_sparse_parse_error_has_position():
    with pytest.raises(ParseError) as exc:
        SparsePoly.from_text("a\n+ 2*q", AB)
    assert exc.value.line == 2


@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                       st.fractions(max_denominator=9).filter(bool), max_size=5),
       st.fractions(max_denominator=5), st.fractions(max_denominator=5))
def test_sparse_arithmetic_matches_evaluation(terms, x, y):
    p = SparsePoly(AB, terms)
    q = SparsePoly.from_text("a*b - 2*a + 1", AB)
    pt = (x, y)
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)
    assert (p - q * 3).evaluate(pt) == p.evaluate(pt) - 3 * q.evaluate(pt)
    assert (q ** 3).evaluate(pt) == q.evaluate(pt) ** 3


def test_weighted_homogeneity():
    p = SparsePoly.from_text("a^3 + a*b^2 - 7*b^2*a", AB)
    assert p.is_weighted_homogeneous((2, 2), 6)
    assert not SparsePoly.from_text("a^3 + b", AB).is_weighted_homogeneous((1, 1))


def test_environment_forces_numpy_fallback():
    import os
    import subprocess
    import sys

    code = ("from octavic.arith import kernels, solve_modular; "
            "print(kernels.BACKEND, solve_modular([[1, 1], [1, -1]], [3, 1]))")
    env = dict(os.environ, OCTAVIC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python [2, 1]"
