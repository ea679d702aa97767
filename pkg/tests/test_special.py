from fractions import Fraction
from math import comb

import pytest
import sympy

from lyndonzeta.algebra import Polynomial, QQ, RationalFunction, rf_eval
from lyndonzeta.special import (
    apostol_bernoulli_number,
    apostol_bernoulli_poly,
    apostol_bernoulli_poly_binomial,
    apostol_bernoulli_poly_symbolic,
    apostol_via_frobenius,
    apostol_via_frobenius_printed,
    bernoulli_number,
    bernoulli_poly,
    euler_number,
    frobenius_euler,
    geometric_moment_gf,
    unified_Y,
)

z = RationalFunction.variable("z")
beta = RationalFunction.variable("beta")


def akiyama_tanigawa(n):
    """Bernoulli numbers by the Akiyama-Tanigawa algorithm (B_1 = +1/2)."""
    a = [Fraction(1, m + 1) for m in range(n + 1)]
    for m in range(n + 1):
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def sympy_coeffs(expr, var, order):
    """n! [t^n] of a sympy expression in t, as sympy rational functions in var."""
    t = sympy.Symbol("t")
    ser = sympy.series(expr, t, 0, order).removeO()
    return [sympy.factor(sympy.simplify(ser.coeff(t, n) * sympy.factorial(n))) for n in range(order)]


def to_sympy(f, name):
    s = sympy.Symbol(name)
    num = sum(sympy.Rational(c.numerator, c.denominator) * s**i for i, c in enumerate(f.num.coeffs))
    den = sum(sympy.Rational(c.numerator, c.denominator) * s**i for i, c in enumerate(f.den.coeffs))
    return num / den


class TestBernoulliEuler:
    def test_examples(self):
        assert bernoulli_number(0) == 1
        assert bernoulli_number(1) == Fraction(-1, 2)
        assert bernoulli_number(12) == Fraction(-691, 2730)

    def test_against_akiyama_tanigawa(self):
        for n in range(2, 31):
            assert bernoulli_number(n) == akiyama_tanigawa(n)

    def test_polynomials(self):
        x = Polynomial([0, 1], QQ, "x")
        assert bernoulli_poly(2) == x * x - x + Fraction(1, 6)
        for n in range(12):
            p = bernoulli_poly(n)
            assert p.degree == n and p.lc == 1
            assert p(0) == bernoulli_number(n)
            # B_n(x + 1) - B_n(x) = n x^(n-1)
            for xv in (Fraction(1, 3), Fraction(-2), Fraction(5, 2)):
                assert p(xv + 1) - p(xv) == (n * xv ** (n - 1) if n else 0)

    def test_euler_examples(self):
        assert [euler_number(n) for n in range(8)] == [
            1, Fraction(-1, 2), 0, Fraction(1, 4), 0, Fraction(-1, 2), 0, Fraction(17, 8)]

    def test_euler_from_bernoulli(self):
        # independent closed form: E_n(0) = -2 (2^(n+1) - 1) B_(n+1) / (n + 1)
        for n in range(1, 25):
            expected = -2 * (2 ** (n + 1) - 1) * akiyama_tanigawa(n + 1) / (n + 1)
            assert euler_number(n) == expected
        assert all(euler_number(n) == 0 for n in range(2, 21, 2))


class TestFrobeniusEuler:
    def test_examples(self):
        assert frobenius_euler(0) == RationalFunction.constant(1, "z")
        assert frobenius_euler(1) == 1 / (z - 1)
        assert frobenius_euler(2) == (1 + z) / (1 - z) ** 2

    def test_against_sympy(self):
        zs = sympy.Symbol("z")
        t = sympy.Symbol("t")
        ref = sympy_coeffs((1 - zs) / (sympy.exp(t) - zs), "z", 6)
        for n in range(6):
            assert sympy.simplify(to_sympy(frobenius_euler(n), "z") - ref[n]) == 0

    def test_specializes_to_euler(self):
        for n in range(21):
            assert rf_eval(frobenius_euler(n), -1) == euler_number(n)


class TestApostol:
    def test_examples(self):
        assert apostol_bernoulli_number(0) == RationalFunction.constant(0, "z")
        assert apostol_bernoulli_number(2) == -2 * z / (z - 1) ** 2
        assert apostol_bernoulli_number(6) == (
            -6 * z * (z**4 + 26 * z**3 + 66 * z**2 + 26 * z + 1) / (z - 1) ** 6)

    def test_against_sympy(self):
        zs = sympy.Symbol("z")
        t = sympy.Symbol("t")
        ref = sympy_coeffs(t / (zs * sympy.exp(t) - 1), "z", 7)
        for n in range(7):
            assert sympy.simplify(to_sympy(apostol_bernoulli_number(n), "z") - ref[n]) == 0

    def test_denominator_is_power_of_z_minus_one(self):
        for n in range(1, 21):
            assert apostol_bernoulli_number(n).den == Polynomial([-1, 1], QQ, "z") ** n

    def test_residue_at_one(self):
        assert rf_eval((z - 1) * apostol_bernoulli_number(1), 1) == 1

    def test_frobenius_bridge(self):
        assert apostol_via_frobenius(1) == 1 / (z - 1)
        assert apostol_via_frobenius(2) == -2 * z / (z - 1) ** 2
        assert apostol_via_frobenius(3) == 3 * z * (z + 1) / (z - 1) ** 3
        for n in range(1, 21):
            assert apostol_via_frobenius(n) == apostol_bernoulli_number(n)

    def test_printed_prefactor_fails_at_one(self):
        assert apostol_via_frobenius_printed(1) == z
        assert apostol_via_frobenius_printed(1) != apostol_bernoulli_number(1)

    def test_polynomials(self):
        assert apostol_bernoulli_poly(1, Fraction(7, 3)) == 1 / (z - 1)
        x = Fraction(3, 5)
        assert apostol_bernoulli_poly(2, x) == 2 * x / (z - 1) - 2 * z / (z - 1) ** 2
        assert apostol_bernoulli_poly(3, x) == (
            3 * x**2 / (z - 1) - 6 * z * x / (z - 1) ** 2 + 3 * z * (z + 1) / (z - 1) ** 3)

    def test_binomial_agrees_with_series(self):
        for n in range(11):
            sym = apostol_bernoulli_poly_symbolic(n)
            assert sym == apostol_bernoulli_poly_binomial(n)
            for x in (0, 1, 2, -1, Fraction(1, 2)):
                direct = apostol_bernoulli_poly(n, x)
                assert direct == apostol_bernoulli_poly_binomial(n, x)
                assert direct == sum((c * Fraction(x) ** i for i, c in enumerate(sym.coeffs)),
                                     RationalFunction.constant(0, "z"))
            assert apostol_bernoulli_poly(n, 0) == apostol_bernoulli_number(n)

    def test_bad_index(self):
        with pytest.raises(ValueError):
            apostol_bernoulli_number(-1)
        with pytest.raises(ValueError):
            apostol_via_frobenius(0)


class TestUnifiedY:
    def test_examples(self):
        assert unified_Y(0, Fraction(5), 1, 1, 1) == RationalFunction.constant(0, "beta")
        assert unified_Y(2, 0, 1, 1, 1) == -2 * beta / (beta - 1) ** 2
        assert unified_Y(2, 1, 1, 1, 1) == 2 / (beta - 1) - 2 * beta / (beta - 1) ** 2

    def test_reduces_to_apostol(self):
        for n in range(13):
            assert unified_Y(n, 0, 1, 1, 1) == apostol_bernoulli_number(n).with_var("beta")

    def test_shift_in_x_is_not_trivial(self):
        # Y at x = 0 and x = 1 differ: the t e^t factor shifts the coefficients
        assert unified_Y(2, 0, 1, 1, 1) != unified_Y(2, 1, 1, 1, 1)
        # instead beta Y_n(1) - Y_n(0) = n 0^(n-1) (Apostol difference relation)
        for n in range(2, 8):
            assert beta * unified_Y(n, 1, 1, 1, 1) - unified_Y(n, 0, 1, 1, 1) == 0

    def test_against_sympy_general_parameters(self):
        bs = sympy.Symbol("beta")
        t = sympy.Symbol("t")
        for x, k, a, b in [(Fraction(1, 2), 0, 2, 1), (2, 2, 1, 2), (1, 1, Fraction(3, 2), 1)]:
            xs, as_ = sympy.Rational(str(x)), sympy.Rational(str(a))
            gf = 2 ** (1 - k) * t**k * sympy.exp(t * xs) / (bs**b * sympy.exp(t) - as_**b)
            ref = sympy_coeffs(gf, "beta", 5)
            for n in range(5):
                got = to_sympy(unified_Y(n, x, k, a, b), "beta")
                assert sympy.simplify(got - ref[n]) == 0, (x, k, a, b, n)

    def test_validation(self):
        with pytest.raises(ValueError):
            unified_Y(3, 0, 1, 1, Fraction(1, 2))
        with pytest.raises(ValueError):
            unified_Y(3, 0, 1, 0, 1)


def test_geometric_moments():
    t = RationalFunction.variable("t")
    assert geometric_moment_gf(0) == 1 / (1 - t)
    assert geometric_moment_gf(1) == t / (1 - t) ** 2
    half = Fraction(1, 2)
    for m in range(6):
        partial = sum(Fraction(n**m) * half**n for n in range(1, 400))
        assert abs(rf_eval(geometric_moment_gf(m), half) - (m == 0) - partial) < Fraction(1, 10**60)
