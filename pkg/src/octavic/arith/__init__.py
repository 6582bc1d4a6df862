"""Exact arithmetic substrate: rationals, binary forms, sparse polynomials, linear algebra."""

from fractions import Fraction as Rational

from .exact import (
    DegenerateResultant, content, content_and_primitive, determinant, form_resultant, poly_derivative,
    poly_divmod, poly_gcd, primitive_part, resultant, sylvester_matrix,
)
from .forms import BinaryForm, form_eval
from .linsolve import (
    InconsistentSystem, LinearSystemError, UnderdeterminedSystem, rational_reconstruction,
    solve_fraction_free, solve_linear_exact, solve_modular, solve_multimodular, word_primes,
)
from .sparse import ParseError, SparsePoly, normalize, parse_terms

__all__ = [
    "Rational", "BinaryForm", "form_eval", "SparsePoly", "ParseError", "parse_terms",
    "normalize", "content", "content_and_primitive", "primitive_part", "determinant",
    "sylvester_matrix", "resultant", "form_resultant", "DegenerateResultant", "poly_gcd", "poly_divmod",
    "poly_derivative", "solve_linear_exact", "solve_fraction_free", "solve_modular", "solve_multimodular",
    "rational_reconstruction", "word_primes", "LinearSystemError", "InconsistentSystem",
    "UnderdeterminedSystem",
]
