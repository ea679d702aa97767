"""Counting and enumerating k-ary Lyndon words."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import RationalFunction
from .numtheory import divisors, int_pow, is_prime, mobius

DEFAULT_ENUM_BUDGET = 10**7


class DivisibilityError(ArithmeticError):
    """A divisor sum that must be divisible by n was not; signals a bug."""


class BudgetExceededError(ValueError):
    """Brute-force enumeration would exceed the configured word budget."""


@dataclass(frozen=True)
class Word:
    digits: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("alphabet size must be >= 1")
        if not self.digits:
            raise ValueError("words have length >= 1")
        if any(not 0 <= d < self.k for d in self.digits):
            raise ValueError(f"digit out of range for alphabet of size {self.k}")

    def __len__(self):
        return len(self.digits)

    def rotations(self):
        d = self.digits
        return [d[i:] + d[:i] for i in range(1, len(d))]

    def is_lyndon(self) -> bool:
        """Strictly smaller than each nontrivial rotation."""
        return all(self.digits < r for r in self.rotations())

    def serialize(self):
        if self.k <= 10:
            return "".join(map(str, self.digits))
        return list(self.digits)

    def __str__(self):
        s = self.serialize()
        return s if isinstance(s, str) else json.dumps(s)


@dataclass(frozen=True)
class LyndonCount:
    k: int
    n: int
    count: int


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")


def witt_count(k: int, n: int) -> int:
    """Number of k-ary Lyndon words of length n, by the Moebius divisor sum."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    total = sum(mobius(n // d) * int_pow(k, d) for d in divisors(n))
    q, r = divmod(total, n)
    if r:
        raise DivisibilityError(f"divisor sum {total} not divisible by {n}")
    return q


def lyndon_count(k: int, n: int) -> LyndonCount:
    return LyndonCount(k, n, witt_count(k, n))


def prime_power_count(k: int, p: int, m: int) -> int:
    """Closed form for L_k(p^m) with p prime."""
    _require_prime(p)
    if m < 1 or k < 2:
        raise ValueError("need k >= 2 and m >= 1")
    e = p ** (m - 1)
    total = k**e * (k ** (e * (p - 1)) - 1)
    q, r = divmod(total, p**m)
    if r:
        raise DivisibilityError(f"{total} not divisible by {p}^{m}")
    return q


def enumerate_lyndon(k: int, n: int, budget: int = DEFAULT_ENUM_BUDGET) -> list[Word]:
    """All Lyndon words of length n over {0..k-1}, by filtering every string.

    Deliberately naive: this is the oracle the counting formulas are checked
    against, so it only relies on the definition.
    """
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    if k**n > budget:
        raise BudgetExceededError(f"{k}^{n} words exceed the enumeration budget {budget}")
    out = []
    for digits in product(range(k), repeat=n):
        if all(digits < digits[i:] + digits[:i] for i in range(1, n)):
            out.append(Word(digits, k))
    return out


def lyndon_series_coeffs(p: int, K: int) -> list[Fraction]:
    """Coefficients L_0(p), ..., L_K(p) of the series sum_k L_k(p) t^k."""
    _require_prime(p)
    if K < 0:
        raise ValueError("K must be >= 0")
    out = []
    for k in range(K + 1):
        c = witt_count(k, p)
        if c * p != k**p - k:
            raise DivisibilityError(f"L_{k}({p}) = {c} disagrees with (k^p - k)/p")
        out.append(Fraction(c))
    return out


def lyndon_gf_closed_form(p: int) -> RationalFunction:
    """sum_k L_k(p) t^k as a rational function of t, built from the
    Apostol-Bernoulli numbers B_2(t) and B_{p+1}(t)."""
    from .special import apostol_bernoulli_number

    _require_prime(p)
    b2 = apostol_bernoulli_number(2).with_var("t")
    bp = apostol_bernoulli_number(p + 1).with_var("t")
    return b2 / (2 * p) - bp / (p * (p + 1))


def power_from_divisor_sum(k: int, n: int) -> int:
    """sum_{d | n} d * L_k(d); equals k**n."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    return sum(d * witt_count(k, d) for d in divisors(n))
