import cmath
import math
import random
from fractions import Fraction

import mpmath
import pytest

from lyndonzeta.special import apostol_bernoulli_number
from lyndonzeta.algebra import rf_eval
from lyndonzeta.zeta import (
    DivergenceError,
    NumericResult,
    ZetaParams,
    hurwitz_zeta,
    phi_lerch,
    riemann_zeta,
    unified_zeta,
    zeta_special_value,
)

mpmath.mp.dps = 40


def mp_lerch(z, s, a):
    return complex(mpmath.lerchphi(z, s, a))


def random_params(rng):
    beta = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
    a = rng.uniform(0.5, 3.0)
    b = rng.choice([1.0, 2.0, 0.5, 1.5])
    # keep |beta^b / a^b| <= 0.9
    q = abs(beta) ** b / a**b
    if q > 0.9:
        beta *= (0.9 / q) ** (1 / b)
    s = complex(rng.uniform(-4, 4), rng.uniform(-2, 2))
    return ZetaParams(beta=beta, s=s, x=rng.uniform(0.2, 3.0), k=rng.randint(0, 3), a=a, b=b)


GRID = [random_params(random.Random(seed)) for seed in range(100)]


class TestPhi:
    def test_zero_argument(self):
        r = phi_lerch(0, 2.5, 3.0)
        assert abs(r.value - 3.0**-2.5) <= r.error_bound + 1e-15

    def test_geometric(self):
        r = phi_lerch(0.5, 0, 1)
        assert abs(r.value - 2) <= r.error_bound <= 1e-10

    def test_z_one_is_zeta(self):
        r = phi_lerch(1, 2, 1)
        assert abs(r.value - 1.6449340668482264) <= r.error_bound <= 1e-10

    @pytest.mark.parametrize("z,s,a", [
        (0.5, 2, 1), (-0.7, 3.5, 0.5), (0.9, -2, 2.0), (0.3 + 0.4j, 1 + 2j, 1.5),
        (-0.95, 0.5, 0.25), (0.99, 1.5, 1.0),
    ])
    def test_against_mpmath(self, z, s, a):
        r = phi_lerch(z, s, a)
        assert r.error_bound <= 1e-10
        assert abs(r.value - mp_lerch(z, s, a)) <= r.error_bound

    def test_divergence(self):
        with pytest.raises(DivergenceError):
            phi_lerch(1.5, 2, 1)
        with pytest.raises(DivergenceError):
            phi_lerch(-1, 2, 1)
        with pytest.raises(DivergenceError):
            phi_lerch(1, 1, 1)
        with pytest.raises(DivergenceError):
            phi_lerch(1, 0.5, 1)

    def test_offset_zero(self):
        # a = 0 only makes sense for non-positive integer s
        assert abs(phi_lerch(0.5, -1, 0).value - 2) < 1e-9
        with pytest.raises(DivergenceError):
            phi_lerch(0.5, 2, 0)


class TestHurwitz:
    def test_zeta2(self):
        r = riemann_zeta(2, tol=1e-8)
        assert r.error_bound <= 1e-8
        assert abs(r.value - math.pi**2 / 6) <= r.error_bound

    def test_zeta4(self):
        r = riemann_zeta(4)
        assert abs(r.value - 1.0823232337111382) <= r.error_bound <= 1e-10

    def test_hurwitz_a1_is_riemann(self):
        assert hurwitz_zeta(2, 1).value == riemann_zeta(2).value

    @pytest.mark.parametrize("s,a", [(1.01, 1), (2, 0.3), (3 + 5j, 2.5), (1.5 - 20j, 1)])
    def test_against_mpmath(self, s, a):
        r = hurwitz_zeta(s, a)
        assert abs(r.value - complex(mpmath.zeta(s, a))) <= r.error_bound <= 1e-10

    def test_large_value_needs_looser_tolerance(self):
        # zeta(7, 0.05) ~ 1.3e9: an absolute 1e-10 is beyond double precision
        with pytest.raises(DivergenceError):
            hurwitz_zeta(7, 0.05)
        r = hurwitz_zeta(7, 0.05, tol=1e-4)
        assert abs(r.value - complex(mpmath.zeta(7, 0.05))) <= r.error_bound <= 1e-4

    def test_rejects_left_half_plane(self):
        with pytest.raises(DivergenceError):
            riemann_zeta(1)
        with pytest.raises(DivergenceError):
            riemann_zeta(0.5 + 3j)


class TestUnifiedZeta:
    def test_reduces_to_phi(self):
        p = ZetaParams(beta=0.4, s=1.5, x=0.7)
        assert abs(unified_zeta(p).value - mp_lerch(0.4, 1.5, 0.7)) <= 1e-10

    def test_closed_case(self):
        r = unified_zeta(ZetaParams(beta=1 / 3, s=-1, x=1))
        assert abs(r.value - 2.25) <= r.error_bound <= 1e-10

    def test_divergence(self):
        with pytest.raises(DivergenceError):
            unified_zeta(ZetaParams(beta=2, s=0, x=1, a=1.5))

    def test_validation(self):
        with pytest.raises(ValueError):
            unified_zeta(ZetaParams(beta=0.5, s=0, x=-1))
        with pytest.raises(ValueError):
            unified_zeta(ZetaParams(beta=0.5, s=0, x=1, a=0))

    @pytest.mark.parametrize("p", GRID[:30])
    def test_against_mpmath(self, p):
        r = unified_zeta(p)
        q = p.ratio()
        expected = (-0.5) ** (p.k - 1) / p.a**p.b * mp_lerch(q, p.s, p.x)
        assert abs(r.value - expected) <= r.error_bound + 1e-12 * abs(expected)

    def test_two_paths_agree(self):
        for p in GRID:
            d, f = unified_zeta(p, method="both")
            assert abs(d.value - f.value) <= d.error_bound + f.error_bound

    def test_doubling_terms_stays_within_bound(self):
        for p in GRID:
            r = unified_zeta(p)
            beta, s = complex(p.beta), complex(p.s)
            pref = (-0.5) ** (p.k - 1)
            terms = [pref * cmath.exp(p.b * n * cmath.log(beta) - p.b * (n + 1) * math.log(p.a)
                                      - s * math.log(n + p.x))
                     for n in range(2 * r.terms_used)]
            longer = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
            assert abs(longer - r.value) <= r.error_bound

    def test_x_equal_one_display(self):
        # x = 1 shifts the index: (-1/2)^(k-1) sum_{n>=1} beta^(b(n-1)) / (a^(bn) n^s)
        def shifted(p, exponent_shift):
            tot = sum(p.beta ** (p.b * (n - 1)) / (p.a ** (p.b * (n + exponent_shift)) * n**p.s)
                      for n in range(1, 400))
            return (-0.5) ** (p.k - 1) * tot

        p1 = ZetaParams(beta=0.5, s=2, x=1, k=2, a=1, b=1)
        r1 = unified_zeta(p1)
        assert abs(r1.value - shifted(p1, 0)) <= r1.error_bound + 1e-14
        assert abs(r1.value - shifted(p1, 1)) <= r1.error_bound + 1e-14  # a = 1 hides the exponent
        p2 = ZetaParams(beta=0.5, s=2, x=1, k=2, a=2, b=1)
        r2 = unified_zeta(p2)
        assert abs(r2.value - shifted(p2, 0)) <= r2.error_bound + 1e-14
        # the a^(b(n+1)) display is off by a factor a^b
        assert abs(r2.value - shifted(p2, 1)) > 0.1
        assert abs(r2.value - 2 * shifted(p2, 1)) <= r2.error_bound + 1e-14


class TestSpecialValues:
    def test_closed_case(self):
        series, exact = zeta_special_value(2, 1, 1, 1, 1, Fraction(1, 3))
        assert exact == Fraction(9, 4)
        assert abs(series.value - 2.25) <= series.error_bound

    def test_remark_examples(self):
        t = Fraction(1, 2)
        assert -rf_eval(apostol_bernoulli_number(2), t) / 2 == 2
        assert -rf_eval(apostol_bernoulli_number(1), t) == 2
        # the geometric-derivative oracle: sum n (1/2)^n = (1/2)/(1/2)^2
        assert t / (1 - t) ** 2 == 2

    @pytest.mark.parametrize("k", [0, 1, 2])
    @pytest.mark.parametrize("a", [1, 2])
    @pytest.mark.parametrize("beta", [Fraction(1, 3), Fraction(-1, 3), Fraction(1, 2)])
    @pytest.mark.parametrize("x", [1, 2])
    def test_bridge(self, k, a, beta, x):
        for n in range(1, 7):
            series, exact = zeta_special_value(n, x, k, a, 1, beta)
            err = abs(series.value - float(exact))
            assert err <= series.error_bound
            assert err <= 1e-10

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            zeta_special_value(0, 1, 1, 1, 1, Fraction(1, 3))


def test_numeric_result_json():
    r = NumericResult(1 + 2j, 1e-12, 5)
    assert r.to_json() == {"value": [1.0, 2.0], "error_bound": 1e-12, "terms": 5}
