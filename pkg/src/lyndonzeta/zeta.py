"""Lerch-type zeta functions with explicit truncation-error bounds.

Values are double-precision complex numbers. Every result carries an
``error_bound`` that covers the truncated tail (by a geometric-ratio or
Euler-Maclaurin remainder estimate) plus a conservative allowance for
floating-point rounding.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .special import bernoulli_number, unified_Y

EPS = 2.0**-52
DEFAULT_TOL = 1e-10
MAX_TERMS = 2_000_000


class DivergenceError(ValueError):
    """Parameters lie outside the region where the defining series converges."""


@dataclass(frozen=True)
class NumericResult:
    value: complex
    error_bound: float
    terms_used: int

    def to_json(self) -> dict:
        v = complex(self.value)
        return {"value": [v.real, v.imag], "error_bound": self.error_bound,
                "terms": self.terms_used}


@dataclass(frozen=True)
class ZetaParams:
    """Arguments of zeta_beta(s, x; k, a, b)."""

    beta: complex
    s: complex
    x: float
    k: int = 1
    a: float = 1.0
    b: float = 1.0

    def ratio(self) -> complex:
        """beta^b / a^b, the common ratio of the defining series."""
        return _cpow(complex(self.beta), self.b) / self.a**self.b


def _cpow(base: complex, e: float) -> complex:
    if base == 0:
        return 0j
    return cmath.exp(e * cmath.log(base))


def _zero_offset_term(s: complex) -> complex:
    # (0)^(-s) is only meaningful for s a non-positive integer, as 0^m
    if s.imag == 0 and s.real <= 0 and float(s.real).is_integer():
        return 1.0 + 0j if s.real == 0 else 0j
    raise DivergenceError(f"offset 0 needs s to be a non-positive integer, got s={s}")


def _fsum_complex(values) -> complex:
    values = list(values)
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def _ratio_series(term, q_abs: float, sigma: float, s_abs: float, offset: float,
                  tol: float, arg_growth: float = 0.0) -> NumericResult:
    """Sum term(n), n >= 0, where |term(n)| ~ C |q|^n (n + offset)^(-sigma).

    Past index N the ratio of consecutive magnitudes is at most
    r_N = |q| * (1 + 1/(N + offset))^max(0, -sigma), which decreases in N;
    once r_N < 1 the tail is bounded by |term(N)| / (1 - r_N). Summation
    stops when that tail is below tol/8. If the rounding allowance alone
    exceeds ``tol`` (very large values), the returned bound exceeds it too.
    ``arg_growth`` is the per-index growth of any exponent fed to exp(),
    which scales the rounding allowance.
    """
    if q_abs >= 1:
        raise DivergenceError(f"|ratio| = {q_abs} must be < 1 for series evaluation")
    grow = max(0.0, -sigma)
    terms, weights = [], 0.0
    n = 0
    while True:
        t = term(n)
        terms.append(t)
        weights += abs(t) * (8 + 2 * math.log2(n + 1) + s_abs * math.log(n + offset + 2)
                            + arg_growth * n)
        n += 1
        base = n + offset
        r = q_abs * (1.0 + 1.0 / base) ** grow
        if r < 1:
            nxt = abs(term(n))
            tail = nxt / (1.0 - r)
            if tail <= tol / 8 or nxt == 0.0:
                return NumericResult(_fsum_complex(terms), tail + EPS * weights, n)
        if n > MAX_TERMS:
            raise DivergenceError("series did not reach the requested tolerance")


def _hurwitz_em(s: complex, a: float, tol: float) -> NumericResult:
    """sum_{n>=0} (n+a)^(-s) for Re(s) > 1 by Euler-Maclaurin.

    Partial sum to N-1, then the integral (N+a)^(1-s)/(s-1), the half term,
    and Bernoulli corrections up to order 2p. The remainder is bounded by
    2 |B_2p| / (2p)! * |(s)_2p| * (N+a)^(1-sigma-2p) / (sigma+2p-1).
    """
    sigma = s.real
    best = None
    for N in (8, 16, 32, 64, 128, 256, 512, 1024, 4096, 16384):
        base = N + a
        rising = [1 + 0j]  # rising[j] = s (s+1) ... (s+j-1)
        for j in range(80):
            rising.append(rising[-1] * (s + j))
        for p in range(1, 40):
            b2p = abs(float(bernoulli_number(2 * p)))
            rem = (2 * b2p / factorial(2 * p) * abs(rising[2 * p])
                   * base ** (1 - sigma - 2 * p) / (sigma + 2 * p - 1))
            if best is None or rem < best[2]:
                best = (N, p, rem)
            if rem <= tol / 2:
                break
        if best[2] <= tol / 2:
            break
    N, p, rem = best
    terms = [cmath.exp(-s * math.log(n + a)) for n in range(N)]
    base = N + a
    fN = cmath.exp(-s * math.log(base))
    corr = [base * fN / (s - 1), fN / 2]
    rising = 1 + 0j
    for j in range(1, 2 * p):
        rising *= s + j - 1
        if j % 2 == 1:
            b = float(bernoulli_number(j + 1))
            corr.append(b / factorial(j + 1) * rising * cmath.exp((-s - j) * math.log(base)))
    value = _fsum_complex(terms + corr)
    rounding = EPS * (16 + 4 * abs(s) * math.log(base + 1)) * (
        sum(abs(t) for t in terms) + sum(abs(c) for c in corr))
    return NumericResult(value, rem + rounding, N + p)


def hurwitz_zeta(s, a: float = 1.0, tol: float = DEFAULT_TOL) -> NumericResult:
    """zeta(s, a) = sum_{n>=0} (n+a)^(-s), Re(s) > 1, a > 0."""
    s = complex(s)
    if s.real <= 1:
        raise DivergenceError(f"Hurwitz zeta needs Re(s) > 1, got Re(s) = {s.real}")
    if a <= 0:
        raise ValueError("a must be > 0")
    res = _hurwitz_em(s, float(a), tol)
    if res.error_bound > tol:
        raise DivergenceError(f"could not certify tolerance {tol} (bound {res.error_bound:.3g})")
    return res


def riemann_zeta(s, tol: float = DEFAULT_TOL) -> NumericResult:
    return hurwitz_zeta(s, 1.0, tol)


def phi_lerch(z, s, a: float, tol: float = DEFAULT_TOL) -> NumericResult:
    """Hurwitz-Lerch Phi(z, s, a) = sum_{n>=0} z^n / (n+a)^s.

    |z| < 1 sums the series directly; z = 1 defers to the Hurwitz zeta.
    """
    z, s, a = complex(z), complex(s), float(a)
    if a < 0:
        raise ValueError("a must be >= 0")
    if z == 1:
        return hurwitz_zeta(s, a, tol)
    if abs(z) > 1:
        raise DivergenceError(f"|z| = {abs(z)} > 1: the series diverges")
    if abs(z) == 1:
        raise DivergenceError("|z| = 1 with z != 1 is not supported (no continuation)")
    if z == 0:
        v = _zero_offset_term(s) if a == 0 else cmath.exp(-s * math.log(a))
        return NumericResult(v, EPS * 4 * abs(v), 1)

    def term(n):
        if n + a == 0:
            return _zero_offset_term(s)
        return z**n * cmath.exp(-s * math.log(n + a))

    return _ratio_series(term, abs(z), s.real, abs(s), a, tol)


def _zeta_direct(p: ZetaParams, tol: float) -> NumericResult:
    beta, s, x, b = complex(p.beta), complex(p.s), float(p.x), float(p.b)
    la = math.log(p.a)
    pref = (-0.5) ** (p.k - 1)
    if beta == 0:
        v0 = _zero_offset_term(s) if x == 0 else cmath.exp(-s * math.log(x))
        v = pref * cmath.exp(-b * la) * v0
        return NumericResult(v, EPS * 8 * abs(v), 1)
    lb = cmath.log(beta)

    def term(n):
        if n + x == 0:
            return pref * cmath.exp(-b * la) * _zero_offset_term(s)
        return pref * cmath.exp(b * n * lb - b * (n + 1) * la - s * math.log(n + x))

    return _ratio_series(term, abs(p.ratio()), s.real, abs(s), x, tol,
                         arg_growth=b * (abs(lb) + abs(la)))


def unified_zeta(params: ZetaParams, tol: float = DEFAULT_TOL, method: str = "direct"):
    """zeta_beta(s, x; k, a, b).

    ``method`` is ``"direct"`` (sum the defining series), ``"phi"`` (through
    (-1/2)^(k-1) a^(-b) Phi(beta^b/a^b, s, x)) or ``"both"``, which returns
    the pair (direct, phi).
    """
    if params.a <= 0 or params.b <= 0:
        raise ValueError("a and b must be positive")
    if params.x < 0:
        raise ValueError("x must be >= 0")
    q = params.ratio()
    if abs(q) >= 1:
        raise DivergenceError(f"|beta^b / a^b| = {abs(q):.6g} must be < 1")
    if method == "direct":
        return _zeta_direct(params, tol)
    if method == "phi":
        scale = (-0.5) ** (params.k - 1) / params.a**params.b
        inner = phi_lerch(q, params.s, params.x, tol / max(abs(scale), 1e-300))
        return NumericResult(scale * inner.value,
                             abs(scale) * inner.error_bound + EPS * 4 * abs(scale * inner.value),
                             inner.terms_used)
    if method == "both":
        return unified_zeta(params, tol, "direct"), unified_zeta(params, tol, "phi")
    raise ValueError(f"unknown method {method!r}")


def zeta_special_value(n: int, x, k: int, a, b: int, beta,
                       tol: float = DEFAULT_TOL) -> tuple[NumericResult, Fraction]:
    """zeta_beta(1-n, x; k, a, b) summed numerically, paired with the exact
    value (-1)^k (n-1)!/(n+k-1)! * Y_{n+k-1, beta}(x; k, a, b)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    beta = Fraction(beta)
    x, a = Fraction(x), Fraction(a)
    y = unified_Y(n + k - 1, x, k, a, b)
    exact = (-1) ** k * Fraction(factorial(n - 1), factorial(n + k - 1)) * y(beta)
    params = ZetaParams(beta=complex(beta), s=complex(1 - n), x=float(x), k=k,
                        a=float(a), b=float(b))
    series = unified_zeta(params, tol)
    return series, exact
