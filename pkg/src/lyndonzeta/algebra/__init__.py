"""Exact arithmetic: rationals, polynomials, rational functions, power series."""

from fractions import Fraction

from .field import QQ, Field, RationalField, fraction_to_str
from .polynomial import Polynomial, PolynomialRing, poly_gcd
from .ratfunc import FunctionField, PoleError, RationalFunction, rf_eval, rf_reduce
from .series import (
    NonInvertibleError,
    PowerSeries,
    exp_series,
    ps_exp_poly,
    ps_inverse,
    ps_mul,
    taylor_coeffs,
)

__all__ = [
    "Fraction",
    "QQ",
    "Field",
    "RationalField",
    "FunctionField",
    "Polynomial",
    "PolynomialRing",
    "RationalFunction",
    "PowerSeries",
    "PoleError",
    "NonInvertibleError",
    "fraction_to_str",
    "poly_gcd",
    "rf_reduce",
    "rf_eval",
    "ps_mul",
    "ps_inverse",
    "ps_exp_poly",
    "exp_series",
    "taylor_coeffs",
]
