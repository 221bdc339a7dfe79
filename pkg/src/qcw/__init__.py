"""Exact verification of q-series congruences modulo cyclotomic polynomials."""

from .arith import BigRat, LaurentPoly, Poly, RatFunc, poly_divrem, poly_gcd, poly_subst_power, q
from .congruence import CongruenceReport, Label, Verdict, check_equal, check_zero
from .cyclotomic import ModulusSpec, Phi, QInt, build_modulus, cyclotomic, q_integer
from .qseries import FamilyKind, SummandFamily, pochhammer, q_bracket, summand, truncated_sum

__version__ = "0.1.0"

__all__ = [
    "BigRat", "LaurentPoly", "Poly", "RatFunc", "poly_divrem", "poly_gcd", "poly_subst_power", "q",
    "CongruenceReport", "Label", "Verdict", "check_equal", "check_zero",
    "ModulusSpec", "Phi", "QInt", "build_modulus", "cyclotomic", "q_integer",
    "FamilyKind", "SummandFamily", "pochhammer", "q_bracket", "summand", "truncated_sum",
]
