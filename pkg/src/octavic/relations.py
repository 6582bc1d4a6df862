"""The quintic relation satisfied by J8 over Q[J2..J7], its coefficient
polynomials I8..I40, and the machinery that recovers them from samples."""

from __future__ import annotations

import logging
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np

from .arith.exact import content
from .arith.forms import BinaryForm
from .arith.linsolve import InconsistentSystem, UnderdeterminedSystem, solve_multimodular
from .arith.sparse import SparsePoly, normalize, parse_terms
from .invariants import compute_invariants

__all__ = [
    "VARIABLES", "WEIGHTS", "BLOCKS", "BLOCK_SCALE", "SyzygyCoefficients", "SyzygyReport",
    "WeightViolation", "RecoveryError", "weighted_monomials", "load_coefficients",
    "recover_coefficients", "syzygy_residual", "syzygy_polynomial", "i_invariants",
    "degenerate_locus_check", "restricted_relation", "diff_against", "write_coefficients",
    "default_data_dir", "random_octavic", "coefficients", "ShiodaRefutation", "shioda_refutation",
]

log = logging.getLogger(__name__)

# a..f stand for J2..J7
VARIABLES = ("a", "b", "c", "d", "e", "f")
WEIGHTS = (2, 3, 4, 5, 6, 7)
BLOCKS = (8, 16, 24, 32, 40)

# the relation reads J8^5 + sum_m BLOCK_SCALE[8m] * I_8m * J8^(5-m) = 0
BLOCK_SCALE = {
    8: Fraction(1, 3**4 * 5**3),
    16: Fraction(2, 3**8 * 5**6),
    24: Fraction(1, 2 * 3**12 * 5**6),
    32: Fraction(1, 3**16 * 5**10),
    40: Fraction(1, 2**2 * 3**20 * 5**12),
}

DATA_ENV = "OCTAVIC_DATA_DIR"


class WeightViolation(ValueError):
    """A term whose weighted degree disagrees with its block."""

    def __init__(self, message, violations):
        super().__init__(message)
        self.violations = violations


class RecoveryError(ArithmeticError):
    pass


def weighted_degree(exps):
    return sum(w * e for w, e in zip(WEIGHTS, exps))


@lru_cache(maxsize=None)
def weighted_monomials(degree):
    """Exponent vectors in a..f of the given weighted degree, in grlex-descending order."""
    out = []

    def rec(i, remaining, prefix):
        if i == len(WEIGHTS) - 1:
            if remaining % WEIGHTS[i] == 0:
                out.append(prefix + (remaining // WEIGHTS[i],))
            return
        for e in range(remaining // WEIGHTS[i], -1, -1):
            rec(i + 1, remaining - e * WEIGHTS[i], prefix + (e,))

    rec(0, degree, ())
    out.sort(key=lambda e: (sum(e), e), reverse=True)
    return tuple(out)


@dataclass(frozen=True)
class SyzygyCoefficients:
    I8: SparsePoly
    I16: SparsePoly
    I24: SparsePoly
    I32: SparsePoly
    I40: SparsePoly

    def block(self, degree):
        return getattr(self, f"I{degree}")

    def as_dict(self):
        return {d: self.block(d) for d in BLOCKS}

    def evaluate(self, lower):
        """Values of I8..I40 at (J2, ..., J7)."""
        return tuple(normalize(self.block(d).evaluate(lower)) for d in BLOCKS)


@dataclass(frozen=True)
class SyzygyReport:
    residual: Fraction
    i_values: tuple

    @property
    def passed(self):
        return self.residual == 0

    def as_dict(self):
        return {
            "residual": self.residual,
            "iValues": {f"I{d}": v for d, v in zip(BLOCKS, self.i_values)},
            "passed": self.passed,
        }


def default_data_dir(data_dir=None):
    """Explicit argument, then $OCTAVIC_DATA_DIR, then the shipped package data."""
    if data_dir is not None:
        return Path(data_dir)
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("octavic") / "data"))


def _load_block(path, degree, strict):
    text = path.read_text()
    poly_terms = {}
    violations = []
    for line, exps, coeff in parse_terms(text, VARIABLES):
        w = weighted_degree(exps)
        if w != degree:
            violations.append((line, exps, coeff, w))
            continue
        poly_terms[exps] = poly_terms.get(exps, 0) + coeff
    if violations and strict:
        line, exps, coeff, w = violations[0]
        raise WeightViolation(
            f"{path.name}:{line}: term {_term_text(exps, coeff)} "
            f"has weight {w}, expected {degree} ({len(violations)} violating terms)",
            violations)
    return SparsePoly(VARIABLES, poly_terms), violations


def load_coefficients(data_dir=None, strict=True, with_violations=False):
    """Read I8..I40 from ``I8.txt`` .. ``I40.txt``.

    Every term is weight-checked.  With ``strict`` a violating term raises
    :class:`WeightViolation` naming its file and line; otherwise violating
    terms are dropped and, if ``with_violations`` is set, returned alongside.
    """
    base = default_data_dir(data_dir)
    polys = {}
    violations = {}
    for d in BLOCKS:
        path = base / f"I{d}.txt"
        if not path.exists():
            raise FileNotFoundError(f"missing coefficient file {path}")
        polys[d], violations[d] = _load_block(path, d, strict)
    coeffs = SyzygyCoefficients(*(polys[d] for d in BLOCKS))
    return (coeffs, violations) if with_violations else coeffs


@lru_cache(maxsize=4)
def _cached_coefficients(data_dir):
    return load_coefficients(data_dir)


def coefficients(data_dir=None):
    """Loaded coefficients, cached per data directory."""
    return _cached_coefficients(str(default_data_dir(data_dir)))


def syzygy_polynomial(i_values, j8):
    """Left-hand side of the relation for given I-values and J8."""
    acc = Fraction(j8) ** 5
    for m, (d, iv) in enumerate(zip(BLOCKS, i_values), start=1):
        acc += BLOCK_SCALE[d] * iv * Fraction(j8) ** (5 - m)
    return normalize(acc)


def syzygy_residual(t, data=None):
    """Evaluate the quintic relation at an invariant tuple."""
    data = data if data is not None else coefficients()
    i_values = data.evaluate(t.lower)
    return SyzygyReport(residual=syzygy_polynomial(i_values, t.J8), i_values=i_values)


def i_invariants(t, data=None):
    """(I8, I16, I24, I32, I40) evaluated at (J2, ..., J7)."""
    data = data if data is not None else coefficients()
    return data.evaluate(t.lower)


def degenerate_locus_check(t):
    """On J4 = J5 = J6 = J7 = 0 the relation collapses to a product with J8.

    Returns whether ``J8 * (-10125 J8 + 1075648 J2^4 - 42336 J3^2 J2)``
    vanishes.
    """
    if any(t.J(i) != 0 for i in (4, 5, 6, 7)):
        raise ValueError("degenerate locus check needs J4 = J5 = J6 = J7 = 0")
    j2, j3, j8 = t.J2, t.J3, t.J8
    return j8 * (-10125 * j8 + 1075648 * j2**4 - 42336 * j3**2 * j2) == 0


def restricted_relation(zero, data=None):
    """The relation as a polynomial in a..f and J8 after setting some of a..f to zero.

    ``zero`` is an iterable of variable names.  The result lives in the
    variables a..f plus ``J8``.
    """
    data = data if data is not None else coefficients()
    names = VARIABLES + ("J8",)
    mapping = {v: 0 for v in zero}
    j8 = SparsePoly.var("J8", names)
    acc = j8 ** 5
    for m, d in enumerate(BLOCKS, start=1):
        block = _extend(data.block(d).substitute(mapping), names)
        acc = acc + block * BLOCK_SCALE[d] * j8 ** (5 - m)
    return acc


def _extend(poly, names):
    return SparsePoly(names, {e + (0,): c for e, c in poly.items()})


def random_octavic(rng, bound):
    """A random integer octavic with coefficients in [-bound, bound] and nonzero discriminant."""
    while True:
        f = BinaryForm([rng.randint(-bound, bound) for _ in range(9)])
        if f.coeffs[8] == 0 and f.coeffs[7] == 0:
            continue
        t = compute_invariants(f)
        if t.discriminant != 0:
            return f, t


def _columns():
    cols = []
    for m, d in enumerate(BLOCKS, start=1):
        for exps in weighted_monomials(d):
            cols.append((m, exps))
    return cols


def _residue_builder(samples, cols):
    # samples: list of (J2..J8) integer tuples
    values = [[int(v) for v in s] for s in samples]
    max_exp = [max(e[k] for _, e in cols) for k in range(6)]

    def residue_matrix(p):
        jm = np.array([[v % p for v in row] for row in values], dtype=np.uint64)
        n = len(values)
        tables = []
        for k in range(7):
            top = max_exp[k] if k < 6 else 5
            t = np.ones((top + 1, n), dtype=np.uint64)
            for e in range(1, top + 1):
                t[e] = t[e - 1] * jm[:, k] % p
            tables.append(t)
        out = np.empty((n, len(cols) + 1), dtype=np.uint64)
        for j, (m, exps) in enumerate(cols):
            v = tables[6][5 - m].copy()
            for k, e in enumerate(exps):
                if e:
                    v = v * tables[k][e] % p
            out[:, j] = v
        out[:, -1] = (p - tables[6][5]) % p
        return np.ascontiguousarray(out)

    return residue_matrix


def _polys_from_solution(cols, x):
    terms = {d: {} for d in BLOCKS}
    for (m, exps), v in zip(cols, x):
        if v:
            d = BLOCKS[m - 1]
            terms[d][exps] = normalize(Fraction(v) / BLOCK_SCALE[d])
    return {d: SparsePoly(VARIABLES, terms[d]) for d in BLOCKS}


def recover_coefficients(block="all", samples=None, margin=50, bound=50, seed=0, max_primes=400):
    """Recover I8..I40 by solving for all their coefficients jointly.

    Random integer octavics with coefficients in ``[-bound, bound]`` and
    nonzero discriminant supply one linear equation each: the relation
    evaluated at their invariants, with the monomial coefficients of the
    five I-polynomials as unknowns.  Since J2..J7 are algebraically
    independent the solution is unique once the system has full rank.

    Returns a :class:`SyzygyCoefficients`, or the single polynomial for an
    integer ``block``.
    """
    cols = _columns()
    if samples is None:
        rng = random.Random(seed)
        samples = [random_octavic(rng, bound)[1].basic for _ in range(len(cols) + margin)]
    samples = [tuple(s) for s in samples]
    if len(samples) < len(cols):
        raise RecoveryError(f"insufficient samples: {len(samples)} equations for {len(cols)} unknowns")

    def verify(x):
        polys = _polys_from_solution(cols, x)
        data = SyzygyCoefficients(*(polys[d] for d in BLOCKS))
        return all(syzygy_polynomial(data.evaluate(s[:6]), s[6]) == 0 for s in samples)

    try:
        x = solve_multimodular(len(cols), _residue_builder(samples, cols), verify,
                               max_primes=max_primes)
    except UnderdeterminedSystem as exc:
        raise RecoveryError(f"insufficient samples (rank {exc.rank} < {len(cols)})") from exc
    except InconsistentSystem as exc:
        raise RecoveryError("syzygy form falsified: the sampled system is inconsistent") from exc
    polys = _polys_from_solution(cols, x)
    for d in BLOCKS:
        p = polys[d]
        if not p.is_integral() or abs(content(p)) != 1:
            log.warning("recovered I%d is not primitive over Z (content %s)", d, content(p))
    result = SyzygyCoefficients(*(polys[d] for d in BLOCKS))
    if block == "all":
        return result
    if block not in BLOCKS:
        raise ValueError(f"block must be one of {BLOCKS} or 'all'")
    return result.block(block)


def diff_against(recovered, raw):
    """Term-level differences ``(exps, raw_coeff, recovered_coeff)`` between two polynomials."""
    out = []
    keys = set(recovered.terms) | set(raw.terms)
    for exps in sorted(keys, key=lambda e: (sum(e), e), reverse=True):
        a, b = raw.coefficient(exps), recovered.coefficient(exps)
        if a != b:
            out.append((exps, a, b))
    return out


def _term_text(exps, coeff):
    return SparsePoly(VARIABLES, {exps: coeff}).to_text()


def write_coefficients(data, data_dir, raw=None, raw_violations=None):
    """Write ``I8.txt`` .. ``I40.txt`` and, given the raw transcription, ``transcription_diff.log``."""
    base = Path(data_dir)
    base.mkdir(parents=True, exist_ok=True)
    for d in BLOCKS:
        p = data.block(d)
        header = (f"# I{d}: weighted degree {d} in a..f = J2..J7 (weights 2..7), "
                  f"{len(p)} terms, one per line\n")
        (base / f"I{d}.txt").write_text(header + p.to_text(one_term_per_line=True) + "\n")
    if raw is None:
        return
    lines = ["# recovered coefficients versus the literal transcription in transcribed/",
             "# columns: block, monomial, transcribed coefficient, recovered coefficient"]
    for d in BLOCKS:
        diffs = diff_against(data.block(d), raw.block(d))
        bad = (raw_violations or {}).get(d, [])
        lines.append(f"## I{d}: {len(data.block(d))} recovered terms, "
                     f"{len(raw.block(d))} weight-valid transcribed terms, "
                     f"{len(diffs)} mismatches, {len(bad)} weight violations")
        for line, exps, coeff, w in bad:
            lines.append(f"I{d} weight-violation line {line}: {_term_text(exps, coeff)} (weight {w})")
        for exps, a, b in diffs:
            mono = _term_text(exps, 1).lstrip("+")
            lines.append(f"I{d} {mono}: transcribed {a}, recovered {b}")
    (base / "transcription_diff.log").write_text("\n".join(lines) + "\n")


# values claimed in the literature for the curve y^2 = x^8 + x^7 + ... + 1
KNOWN_SHIODA_TILDES = (
    Fraction(9, 5), Fraction(81, 2450), Fraction(837, 1568), Fraction(2187, 109760),
    Fraction(-6885, 43904), Fraction(-3645, 1229312), Fraction(-410427, 17210368),
    Fraction(234009, 172103680), Fraction(5972697, 860518400),
)
KNOWN_SHIODA_RESIDUAL = Fraction(-546607935510034107123, 462807447961600000)


@dataclass(frozen=True)
class ShiodaRefutation:
    """Outcome of re-running the counterexample to Shioda's first relation.

    ``shioda_residual`` is None: the relation itself and the recipe for its
    intermediate quantities are not available, so only the claimed value
    can be reported, never recomputed.
    """

    tilde_invariants: tuple
    tildes_match_claimed: bool
    corrected_residual: Fraction
    shioda_residual: Fraction | None
    claimed_shioda_residual: Fraction

    @property
    def shioda_reproduced(self):
        return self.shioda_residual is not None

    def as_dict(self):
        return {
            "tilde_invariants": {f"tJ{i}": v for i, v in zip(range(2, 11), self.tilde_invariants)},
            "tildes_match_claimed": self.tildes_match_claimed,
            "corrected_residual": self.corrected_residual,
            "shioda_residual": self.shioda_residual,
            "shioda_reproduced": self.shioda_reproduced,
            "claimed_shioda_residual": self.claimed_shioda_residual,
        }


def shioda_refutation(data=None):
    """Recompute what can be recomputed for the all-ones octavic.

    The tilde invariants are exact and compared with the claimed ones;
    the corrected relation is evaluated and vanishes.
    """
    from .invariants import shioda_invariants

    f = BinaryForm([1] * 9)
    tildes = tuple(shioda_invariants(f).as_dict().values())
    report = syzygy_residual(compute_invariants(f), data)
    return ShiodaRefutation(
        tilde_invariants=tildes,
        tildes_match_claimed=tildes == KNOWN_SHIODA_TILDES,
        corrected_residual=report.residual,
        shioda_residual=None,
        claimed_shioda_residual=KNOWN_SHIODA_RESIDUAL,
    )
