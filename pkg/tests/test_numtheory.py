from math import isqrt, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lyndonzeta.numtheory import (
    divisors,
    factorize,
    int_pow,
    is_prime,
    mobius,
    prime_power_decomposition,
)


def trial_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def trial_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, isqrt(n) + 1))


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(6) == [1, 2, 3, 6]
    d = divisors(36)
    assert d == trial_divisors(36) and len(d) == 9
    assert prod(d) ** 2 == 36**9


def test_mobius_examples():
    assert mobius(1) == 1
    assert mobius(30) == -1
    assert mobius(12) == 0


def test_zero_rejected():
    for fn in (divisors, mobius, factorize, is_prime):
        with pytest.raises(ValueError):
            fn(0)


def test_primality_examples():
    assert is_prime(2)
    assert not is_prime(1)
    assert not is_prime(561)
    assert [n for n in range(1, 2000) if is_prime(n)] == [n for n in range(1, 2000) if trial_is_prime(n)]


def test_primality_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**63 - 1)  # 7^2 * 73 * ...
    assert is_prime(18446744073709551557)  # largest prime below 2^64
    # strong pseudoprimes to every prime base up to 31 and up to 37 respectively
    assert not is_prime(3825123056546413051)
    assert not is_prime(318665857834031151167461)


def test_factorize_examples():
    assert factorize(360).prime_powers == ((2, 3), (3, 2), (5, 1))
    assert factorize(1).prime_powers == ()
    assert factorize(2**31 - 1).prime_powers == ((2**31 - 1, 1),)


def test_int_pow():
    assert int_pow(2, 10) == 1024
    assert int_pow(3, 0) == 1
    assert int_pow(0, 5) == 0
    big = 1
    for _ in range(30):
        big *= 10
    assert int_pow(10, 30) == big and len(str(big)) == 31
    with pytest.raises(ValueError):
        int_pow(0, 0)


def test_prime_power_decomposition():
    assert prime_power_decomposition(125) == (5, 3)
    assert prime_power_decomposition(12) is None
    assert prime_power_decomposition(1) is None


def test_mobius_sum_property_to_10000():
    for n in range(1, 10**4 + 1):
        s = sum(mobius(d) for d in divisors(n))
        assert s == (1 if n == 1 else 0), n


def test_mobius_zero_iff_square_factor_to_10000():
    for n in range(1, 10**4 + 1):
        fac = factorize(n)
        assert (mobius(n) == 0) == any(e >= 2 for _, e in fac.prime_powers)


def test_divisors_from_factorization_to_10000():
    for n in range(1, 10**4 + 1):
        fac = factorize(n)
        assert fac.value() == n
        assert all(is_prime(p) for p in fac.primes())
        assert fac.primes() == sorted(set(fac.primes()))
        if n <= 2000:
            assert divisors(n) == trial_divisors(n)


@given(st.integers(min_value=1, max_value=10**12))
def test_factorization_reconstructs(n):
    fac = factorize(n)
    assert fac.value() == n
    assert all(trial_is_prime(p) for p in fac.primes() if p < 10**6)
