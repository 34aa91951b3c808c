"""Exact scalar tower: Q, Q(zeta_d), trace polynomials, rational functions in v = sqrt(u)."""
from .cyclotomic import CyclotomicNumber, character_value, cyclotomic_polynomial, euler_phi
from .polynomial import TracePolynomial
from .ratfunc import HalfPowerValue, RationalFunction
from .specialize import specialize
from .upoly import UPoly, poly_gcd

__all__ = [
    "CyclotomicNumber",
    "HalfPowerValue",
    "RationalFunction",
    "TracePolynomial",
    "UPoly",
    "character_value",
    "cyclotomic_polynomial",
    "euler_phi",
    "poly_gcd",
    "specialize",
]
