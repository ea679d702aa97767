"""Bernoulli, Euler, Frobenius-Euler, Apostol-Bernoulli and unified Y values.

Every family is produced the same way: expand its defining generating
function as an exact truncated power series (over QQ, or over QQ(z) /
QQ(beta) when the family depends on a parameter) and read off
``n! * [t^n]``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import (
    QQ,
    FunctionField,
    Polynomial,
    PolynomialRing,
    PowerSeries,
    RationalFunction,
    exp_series,
    ps_exp_poly,
    ps_inverse,
    ps_mul,
)

Z_FIELD = FunctionField("z")
BETA_FIELD = FunctionField("beta")


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"index must be a non-negative integer, got {n!r}")


def _bucket(n: int) -> int:
    # round series orders up so nearby indices share one cached expansion
    return ((n + 8) // 8) * 8


# -- classical numbers -------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_series(order: int) -> PowerSeries:
    # t/(e^t - 1) = 1 / ((e^t - 1)/t)
    return ps_inverse(PowerSeries([Fraction(1, factorial(i + 1)) for i in range(order)]))


def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    _check_index(n)
    return _bernoulli_series(_bucket(n))[n] * factorial(n)


def bernoulli_poly(n: int) -> Polynomial:
    """B_n(x) from the coefficient of t^n in t e^{tx}/(e^t - 1)."""
    _check_index(n)
    ring = PolynomialRing(QQ, "x")
    b = _bernoulli_series(_bucket(n)).truncate(n + 1)
    lifted = PowerSeries([ring.coerce(c) for c in b], ring)
    prod = ps_mul(lifted, ps_exp_poly(ring.gen(), n + 1, ring))
    return prod[n] * factorial(n)


@lru_cache(maxsize=None)
def _euler_series(order: int) -> PowerSeries:
    # 2/(e^t + 1) = 1 / ((e^t + 1)/2)
    e = exp_series(order)
    half = [c / 2 for c in e]
    half[0] = Fraction(1) if order else half[0]
    return ps_inverse(PowerSeries(half[:order]))


def euler_number(n: int) -> Fraction:
    """E_n as the coefficients of 2/(e^t + 1) (so E_1 = -1/2)."""
    _check_index(n)
    return _euler_series(_bucket(n))[n] * factorial(n)


# -- parameter-dependent families over QQ(z) --------------------------------

@lru_cache(maxsize=None)
def _frobenius_series(order: int) -> PowerSeries:
    # (1 - z)/(e^t - z)
    z = Z_FIELD.gen()
    den = [Z_FIELD.coerce(Fraction(1, factorial(i))) for i in range(order)]
    den[0] = 1 - z
    return ps_inverse(PowerSeries(den, Z_FIELD)).scale(1 - z)


def frobenius_euler(n: int) -> RationalFunction:
    """H_n(z), coefficients of (1 - z)/(e^t - z)."""
    _check_index(n)
    return _frobenius_series(_bucket(n))[n] * factorial(n)


@lru_cache(maxsize=None)
def _apostol_inverse(order: int) -> PowerSeries:
    # 1/(z e^t - 1); the generating function is t times this
    z = Z_FIELD.gen()
    den = [z / factorial(i) for i in range(order)]
    den[0] = z - 1
    return ps_inverse(PowerSeries(den, Z_FIELD))


def apostol_bernoulli_number(n: int) -> RationalFunction:
    """Apostol-Bernoulli number B_n(z), coefficients of t/(z e^t - 1)."""
    _check_index(n)
    if n == 0:
        return Z_FIELD.zero()
    return _apostol_inverse(_bucket(n))[n - 1] * factorial(n)


def _apostol_poly_series(n: int, x) -> PowerSeries:
    inv = _apostol_inverse(_bucket(n)).truncate(n + 1).shift(1)
    if isinstance(x, Polynomial):
        ring = PolynomialRing(Z_FIELD, x.var)
        lifted = PowerSeries([ring.coerce(c) for c in inv], ring)
        return ps_mul(lifted, ps_exp_poly(x, n + 1, ring))
    return ps_mul(inv, ps_exp_poly(Z_FIELD.coerce(Fraction(x)), n + 1, Z_FIELD))


def apostol_bernoulli_poly(n: int, x) -> RationalFunction:
    """B_n(x, z) at a rational x, from t e^{tx}/(z e^t - 1)."""
    _check_index(n)
    return _apostol_poly_series(n, Fraction(x))[n] * factorial(n)


def apostol_bernoulli_poly_symbolic(n: int, var: str = "x") -> Polynomial:
    """B_n(x, z) as a polynomial in x whose coefficients lie in QQ(z)."""
    _check_index(n)
    x = Polynomial([0, 1], Z_FIELD, var)
    return _apostol_poly_series(n, x)[n] * factorial(n)


def apostol_bernoulli_poly_binomial(n: int, x=None):
    """sum_j C(n, j) x^{n-j} B_j(z).

    With ``x=None`` the result is symbolic in x (a Polynomial over QQ(z));
    otherwise a RationalFunction in z.
    """
    _check_index(n)
    if x is None:
        coeffs = [comb(n, j) * apostol_bernoulli_number(j) for j in range(n, -1, -1)]
        return Polynomial(coeffs, Z_FIELD, "x")
    x = Fraction(x)
    total = Z_FIELD.zero()
    for j in range(n + 1):
        total = total + apostol_bernoulli_number(j) * (comb(n, j) * x ** (n - j))
    return total


def apostol_via_frobenius(n: int) -> RationalFunction:
    """n/(z - 1) * H_{n-1}(1/z), which reproduces B_n(z)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    z = Z_FIELD.gen()
    return n / (z - 1) * frobenius_euler(n - 1).compose(1 / z)


def apostol_via_frobenius_printed(n: int) -> RationalFunction:
    """The prefactor as typeset, n / z^{-1} = n z, times H_{n-1}(1/z)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    z = Z_FIELD.gen()
    return n * z * frobenius_euler(n - 1).compose(1 / z)


# -- unified family over QQ(beta) -------------------------------------------

def unified_Y(n: int, x, k: int, a, b: int) -> RationalFunction:
    """Y_{n,beta}(x; k, a, b) as a rational function of beta.

    Coefficients of 2^{1-k} t^k e^{tx} / (beta^b e^t - a^b). ``b`` must be a
    positive integer so that beta^b stays polynomial.
    """
    _check_index(n)
    if not isinstance(k, int) or k < 0:
        raise ValueError("k must be a non-negative integer")
    a = Fraction(a)
    if a <= 0:
        raise ValueError("a must be positive")
    if not isinstance(b, int) or b < 1:
        raise ValueError("b must be a positive integer for the exact form")
    if k > n:
        return BETA_FIELD.zero()
    return _unified_series(n + 1, Fraction(x), k, a, b)[n] * factorial(n)


@lru_cache(maxsize=256)
def _unified_series(order: int, x: Fraction, k: int, a: Fraction, b: int) -> PowerSeries:
    beta_b = BETA_FIELD.gen() ** b
    den = [beta_b / factorial(i) for i in range(order)]
    den[0] = beta_b - a**b
    inv = ps_inverse(PowerSeries(den, BETA_FIELD))
    body = ps_mul(inv, ps_exp_poly(BETA_FIELD.coerce(x), order, BETA_FIELD))
    return body.shift(k).scale(Fraction(2) ** (1 - k))


# -- power-weighted geometric sums ------------------------------------------

@lru_cache(maxsize=None)
def geometric_moment_gf(m: int, var: str = "t") -> RationalFunction:
    """sum_{n>=0} n^m t^n (with 0^0 = 1), by applying t d/dt to 1/(1 - t)
    m times."""
    if m < 0:
        raise ValueError("m must be >= 0")
    t = RationalFunction.variable(var)
    f = 1 / (1 - t)
    for _ in range(m):
        f = t * f.derivative()
    return f
