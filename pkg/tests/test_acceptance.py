"""Acceptance criteria 1-11, one check each.

Under pytest every check is a test and its verdict is printed in the
terminal summary; ``python3 tests/test_acceptance.py`` prints the same lines.
"""

import random
import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path

from octavic.arith import BinaryForm, SparsePoly
from octavic.invariants import DEGREES, OCTAVIC_VARIABLES, compute_invariants, symbolic_invariants
from octavic.moduli import absolute_invariants, are_isomorphic, t_membership, tau_param_positive, tau_relation
from octavic.relations import (
    BLOCKS, WEIGHTS, coefficients, default_data_dir, diff_against, i_invariants, load_coefficients,
    random_octavic, recover_coefficients, shioda_refutation, syzygy_residual, write_coefficients,
)

from conftest import ACCEPTANCE, random_matrix

PRINTED_J2 = "280*a8*a0 - 35*a7*a1 + 10*a6*a2 - 5*a5*a3 + 2*a4^2"
PRINTED_J3 = """
    1050*a8*a2^2 + 1050*a6^2*a0 + 75*a6*a3^2 + 75*a5^2*a2 + 12*a4^3
    + 3920*a8*a4*a0 - 2450*a8*a3*a1 + 735*a7*a4*a1 - 2450*a7*a5*a0
    - 175*a7*a3*a2 - 110*a6*a4*a2 - 175*a6*a5*a1 - 45*a5*a4*a3
"""
CLAIMED_SHIODA_RESIDUAL = Fraction(-546607935510034107123, 462807447961600000)
MULTIPLICITY4 = (2, 12, 64, 64, 512, 512, 18432)


def lam_closed_forms(lam):
    lam = Fraction(lam)
    u, v = lam - 14, lam + 14
    return (
        -2**11 * 3**4 * 5**4 * (9 * lam**2 - 2450) * u**3 * v**3,
        2**22 * 3**9 * 5**7 * (9 * lam**2 + 980) * (3 * lam**2 - 1960) * u**6 * v**6,
        -2**35 * 3**12 * 5**7 * (9 * lam**2 - 9310) * (9 * lam**2 + 980)**2 * u**9 * v**9,
        2**44 * 3**16 * 5**11 * (9 * lam**2 - 12740) * (9 * lam**2 + 980)**3 * u**12 * v**12,
        -2**57 * 3**21 * 5**12 * (3 * lam**2 - 5390) * (9 * lam**2 + 980)**4 * u**15 * v**15,
    )


def generic_octavic(rng, bound=20):
    while True:
        f, t = random_octavic(rng, bound)
        if all(t.J(i) != 0 for i in (2, 3, 4, 5)):
            return f, t


def check_1():
    rng = random.Random(1001)
    start = time.perf_counter()
    bad = 0
    for _ in range(1000):
        _, t = random_octavic(rng, 20)
        bad += syzygy_residual(t).residual != 0
    elapsed = time.perf_counter() - start
    return bad == 0 and elapsed < 300, f"{1000 - bad}/1000 residuals exactly 0 in {elapsed:.0f} s"


def check_2():
    r = shioda_refutation()
    if r.shioda_residual is None:
        return False, (f"Shioda residual not reproducible (its relation and intermediates are not given; "
                       f"claimed {CLAIMED_SHIODA_RESIDUAL}); tildes match={r.tildes_match_claimed}, "
                       f"corrected residual={r.corrected_residual}")
    # exact match is the full criterion; a provably nonzero value is the fallback
    ok = r.corrected_residual == 0 and r.shioda_residual != 0
    return ok, f"Shioda residual {r.shioda_residual}, corrected residual {r.corrected_residual}"


def check_3():
    sym = symbolic_invariants()
    j2 = SparsePoly.from_text(PRINTED_J2, OCTAVIC_VARIABLES)
    j3 = SparsePoly.from_text(PRINTED_J3, OCTAVIC_VARIABLES)
    ok = sym["J2"] == j2 and sym["J3"] == j3
    return ok, (f"J2 {len(sym['J2'])} terms, J3 {len(sym['J3'])} terms; equal to the printed "
                f"displays ({len(j2)} and {len(j3)} monomials): {ok}")


def check_4():
    rng = random.Random(1004)
    pattern_ok = 0
    for _ in range(50):
        a, b, c, d = (rng.randint(-20, 20) for _ in range(4))
        e = rng.choice([k for k in range(-20, 21) if k])
        t = compute_invariants(BinaryForm([0, 0, 0, 0, e, d, c, b, a]))
        pattern_ok += t.basic == tuple(p * e ** i for i, p in zip(range(2, 9), MULTIPLICITY4))
    vanish_ok = 0
    for _ in range(50):
        root = (rng.randint(-5, 5), rng.randint(1, 5))
        cubic = BinaryForm([rng.randint(-20, 20) for _ in range(3)] + [rng.choice([1, -1, 2, 3])])
        f = BinaryForm.from_roots([root] * 5) * cubic
        vanish_ok += all(compute_invariants(f).J(i) == 0 for i in range(2, 9))
    return pattern_ok == vanish_ok == 50, f"pattern {pattern_ok}/50, multiplicity-5 vanishing {vanish_ok}/50"


def check_5():
    rng = random.Random(1005)
    good = 0
    for _ in range(200):
        f = BinaryForm([rng.randint(-20, 20) for _ in range(9)])
        g = random_matrix(rng, 5)
        (a, b), (c, d) = g
        det = a * d - b * c
        before, after = compute_invariants(f), compute_invariants(f.transform(g))
        good += all(after.J(i) == det ** (4 * i) * before.J(i) for i in DEGREES)
    return good == 200, f"{good}/200 pairs satisfy J_i(f o g) = det^(4i) J_i(f)"


def check_6():
    recovered = recover_coefficients()
    raw, violations = load_coefficients(default_data_dir() / "transcribed", strict=False,
                                        with_violations=True)
    diffs = {d: diff_against(recovered.block(d), raw.block(d)) for d in BLOCKS}
    homogeneous = all(recovered.block(d).is_weighted_homogeneous(WEIGHTS, d) for d in BLOCKS)
    with tempfile.TemporaryDirectory() as tmp:
        write_coefficients(recovered, tmp, raw=raw, raw_violations=violations)
        logged = (Path(tmp) / "transcription_diff.log").read_text().count("\n")
    rng = random.Random(1006)
    sweep = all(syzygy_residual(random_octavic(rng, 20)[1], recovered).residual == 0 for _ in range(50))
    i8_ok, i16_ok = not diffs[8], not diffs[16]
    ok = i8_ok and i16_ok and homogeneous and sweep and logged > 0
    counts = ", ".join(f"I{d} {len(recovered.block(d))} terms/{len(diffs[d])} diffs" for d in BLOCKS)
    return ok, (f"I8 exact={i8_ok}, I16 exact={i16_ok} ({counts}); weighted-homogeneous={homogeneous}, "
                f"recovered relation holds={sweep}, diff log {logged} lines")


def check_7():
    data = coefficients()
    zero = {v: 0 for v in "cdef"}
    vanish = all(data.block(d).substitute(zero).is_zero() for d in (24, 32, 40))
    i8 = data.I8.substitute(zero)
    square = data.I16.substitute(zero) * 8 == i8 * i8
    return vanish and square, f"I24=I32=I40=0: {vanish}; 8*I16 = I8^2: {square}"


def check_8():
    results = {lam: i_invariants(compute_invariants(BinaryForm([1, 0, 0, 0, lam, 0, 0, 0, 1])))
               == lam_closed_forms(lam) for lam in (0, 1, 2, 3)}
    return all(results.values()), "closed forms match at " + ", ".join(
        f"lambda={k}: {v}" for k, v in results.items())


def check_9():
    params = [1, 2, -1, 10**6, 3, -2, Fraction(1, 2), Fraction(-5, 7), 10**9, 2**11 * 3**9 * 5**18 * 7**12]
    held = sum(tau_relation(*tau_param_positive(s)) == 0 for s in params)
    return held == len(params), f"printed parametrization satisfies the relation at {held}/{len(params)} values"


def check_10():
    rng = random.Random(1010)
    same = sum(bool(are_isomorphic(f, f.transform(random_matrix(rng, 4))))
               for f, _ in (random_octavic(rng, 20) for _ in range(100)))
    distinct = 0
    for _ in range(100):
        (f, tf), (g, tg) = random_octavic(rng, 20), random_octavic(rng, 20)
        if absolute_invariants(tf) == absolute_invariants(tg):
            continue
        distinct += not are_isomorphic(f, g)
    axioms = 0
    for n in range(50):
        f, _ = random_octavic(rng, 10)
        g = f.transform(random_matrix(rng, 3)) * rng.randint(1, 4)
        h = g.transform(random_matrix(rng, 3)) if n % 2 else random_octavic(rng, 10)[0]
        fg, gh, fh = are_isomorphic(f, g), are_isomorphic(g, h), are_isomorphic(f, h)
        reflexive = all(are_isomorphic(x, x) for x in (f, g, h))
        symmetric = (bool(fg) == bool(are_isomorphic(g, f)) and bool(gh) == bool(are_isomorphic(h, g))
                     and bool(fh) == bool(are_isomorphic(h, f)))
        transitive = not (fg and gh) or bool(fh)
        axioms += reflexive and symmetric and transitive
    ok = same == 100 and distinct == 100 and axioms == 50
    return ok, f"f ~ f o g: {same}/100; distinct pairs rejected: {distinct}/100; axioms on triples: {axioms}/50"


def check_11():
    rng = random.Random(1011)
    members = 0
    rejected = 0
    for _ in range(100):
        _, t = generic_octavic(rng)
        pt = list(absolute_invariants(t).values)
        members += t_membership(pt)
        k = rng.randrange(6)
        pt[k] += 1
        rejected += not t_membership(pt)
    return members == rejected == 100, f"members {members}/100; perturbed points rejected {rejected}/100"


CHECKS = {n: globals()[f"check_{n}"] for n in range(1, 12)}


def _record(n):
    ok, detail = CHECKS[n]()
    ACCEPTANCE[n] = (ok, detail)
    assert ok, detail


def test_criterion_1_syzygy_vanishing():
    _record(1)


def test_criterion_2_shioda_refutation():
    _record(2)


def test_criterion_3_symbolic_ground_truth():
    _record(3)


def test_criterion_4_multiplicity_patterns():
    _record(4)


def test_criterion_5_covariance():
    _record(5)


def test_criterion_6_coefficient_recovery():
    _record(6)


def test_criterion_7_degenerate_locus():
    _record(7)


def test_criterion_8_lambda_family():
    _record(8)


def test_criterion_9_tau_parametrization():
    _record(9)


def test_criterion_10_isomorphism():
    _record(10)


def test_criterion_11_t_membership():
    _record(11)


if __name__ == "__main__":
    failed = 0
    for n, check in CHECKS.items():
        ok, detail = check()
        failed += not ok
        print(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
    sys.exit(1 if failed else 0)
