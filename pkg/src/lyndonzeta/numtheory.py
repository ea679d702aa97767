"""Integer building blocks: divisors, Moebius function, primality, powers."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

# Miller-Rabin with the first 13 primes (2..41) as witnesses is deterministic
# below this bound (Sorenson & Webster); 2..37 alone fails at 3.18e23.
MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_WHEEL_PRIMES = (2, 3, 5)
_WHEEL_STEPS = (4, 2, 4, 2, 4, 6, 2, 6)  # gaps between residues coprime to 30, from 7


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition, primes strictly increasing."""

    prime_powers: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return prod(p**e for p, e in self.prime_powers)

    def primes(self) -> list[int]:
        return [p for p, _ in self.prime_powers]

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.prime_powers)

    def is_prime_power(self) -> bool:
        return len(self.prime_powers) == 1


def is_prime(n: int) -> bool:
    """Deterministic strong-pseudoprime test, exact below ``MR_DETERMINISTIC_LIMIT``."""
    _check_positive(n)
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n >= MR_DETERMINISTIC_LIMIT:
        raise ValueError("primality is only certified below 3.3e24")
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> Factorization:
    """Trial division over a mod-30 wheel."""
    _check_positive(n)
    out = []
    for p in _WHEEL_PRIMES:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f, i = 7, 0
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += _WHEEL_STEPS[i]
        i = (i + 1) % len(_WHEEL_STEPS)
    if n > 1:
        out.append((n, 1))
    return Factorization(tuple(out))


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    _check_positive(n)
    divs = [1]
    for p, e in factorize(n).prime_powers:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    _check_positive(n)
    fac = factorize(n)
    if not fac.is_squarefree():
        return 0
    return -1 if len(fac.prime_powers) % 2 else 1


def prime_power_decomposition(n: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``n == p**m`` and ``m >= 1``, or None."""
    if n < 2:
        return None
    fac = factorize(n)
    if fac.is_prime_power():
        return fac.prime_powers[0]
    return None


def int_pow(k: int, d: int) -> int:
    """Exact ``k**d`` for non-negative integers; ``0**0`` is rejected."""
    if k < 0 or d < 0:
        raise ValueError("int_pow takes non-negative arguments")
    if k == 0 and d == 0:
        raise ValueError("0^0 is undefined here")
    return k**d
