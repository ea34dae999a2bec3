"""Exact cyclotomic and inverse cyclotomic polynomials, with executable checks."""

from .cyclo import (CycloAlgo, Factorization, OutOfApplicability, check_lemma31,
                    check_lemma35, factor_unity, gamma, phi, phi_neg_odd, phi_radical,
                    phi_recursive, psi, psi_def)
from .polyq import RatPoly, extended_gcd, lcm_many, monic_gcd, monic_lcm, to_int_poly
from .polyz import IntPoly, NonExactDivision
from .qnring import QnContext, qn_inv, qn_order

__all__ = [
    "CycloAlgo", "Factorization", "IntPoly", "NonExactDivision", "OutOfApplicability",
    "QnContext", "RatPoly", "check_lemma31", "check_lemma35", "extended_gcd",
    "factor_unity", "gamma", "lcm_many", "monic_gcd", "monic_lcm", "phi",
    "phi_neg_odd", "phi_radical", "phi_recursive", "psi", "psi_def", "qn_inv",
    "qn_order", "to_int_poly",
]
