"""Exact evaluation and verification of generalized q-Dyson constant terms."""

from .dyson_core import (
    Composition,
    L_IJ,
    corollary_rhs,
    eval_D_corollary,
    eval_D_inductive,
    eval_D_recursive,
    kadell_rhs,
    max_part_set,
    qdyson_rhs,
    theorem_factor,
)
from .laurent import MultiLaurent, dyson_product, h_lambda, h_r_of_alphabet
from .oracle import VerificationReport, brute_D, verify_splitting
from .qring import (
    NonPolynomialResult,
    QLaurentPoly,
    QRat,
    q_binomial,
    q_multinomial,
    q_shifted_factorial,
    to_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "Composition", "L_IJ", "corollary_rhs", "eval_D_corollary", "eval_D_inductive",
    "eval_D_recursive", "kadell_rhs", "max_part_set", "qdyson_rhs", "theorem_factor",
    "MultiLaurent", "dyson_product", "h_lambda", "h_r_of_alphabet",
    "VerificationReport", "brute_D", "verify_splitting",
    "NonPolynomialResult", "QLaurentPoly", "QRat", "q_binomial", "q_multinomial",
    "q_shifted_factorial", "to_polynomial",
]
