"""Invariants of binary octavics and genus-3 hyperelliptic curves, in exact arithmetic."""

from .arith import BinaryForm, SparsePoly
from .invariants import InvariantTuple, compute_invariants, compute_discriminant, shioda_invariants
from .moduli import absolute_invariants, are_isomorphic, classify_multiplicity, t_membership
from .relations import load_coefficients, recover_coefficients, syzygy_residual

__all__ = [
    "BinaryForm", "SparsePoly", "InvariantTuple", "compute_invariants", "compute_discriminant",
    "shioda_invariants", "absolute_invariants", "are_isomorphic", "classify_multiplicity",
    "t_membership", "load_coefficients", "recover_coefficients", "syzygy_residual",
]

__version__ = "0.1.0"
