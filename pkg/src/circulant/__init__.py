"""Exact monomial expansion of circulant determinants."""

from .coeff_engine import coefficient, coefficient_with_path, reduce_representative
from .expansion import ExpansionPolynomial, evaluate, expand

__all__ = [
    "ExpansionPolynomial",
    "coefficient",
    "coefficient_with_path",
    "evaluate",
    "expand",
    "reduce_representative",
]
