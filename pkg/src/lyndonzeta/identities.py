"""Executable catalogue of the Lyndon / Apostol-Bernoulli / zeta identities.

Each ``check_*`` function evaluates one identity at one parameter point and
returns an :class:`IdentityReport`. ``run_all`` sweeps every catalogued
identity over its grid and folds the points into one report per identity.

Where a published statement is wrong as typeset, the check evaluates both
the printed and the corrected right-hand side, so the report shows the
discrepancy instead of hiding it. Only identities in ``ERRATA`` may end in
``corrected-pass``.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import Polynomial, RationalFunction, fraction_to_str, rf_eval, taylor_coeffs
from .lyndon import (
    enumerate_lyndon,
    lyndon_gf_closed_form,
    lyndon_series_coeffs,
    power_from_divisor_sum,
    prime_power_count,
    witt_count,
)
from .numtheory import divisors
from .special import (
    Z_FIELD,
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
from .zeta import (
    ZetaParams,
    hurwitz_zeta,
    phi_lerch,
    riemann_zeta,
    unified_zeta,
    zeta_special_value,
)

PASS = "pass"
FAIL = "fail"
CORRECTED_PASS = "corrected-pass"

ERRATA = frozenset({
    "frobenius-lyndon-theorem",
    "euler-corollary",
    "frobenius-apostol-relation",
    "apostol-polynomial-table",
    "gf-remark-p2-label",
    "zeta-power-sum-remark",
})

ZETA_BRIDGE_TOL = 1e-10


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    parameters: dict
    status: str
    lhs: object
    rhs: object
    note: str = ""

    def __post_init__(self):
        if self.status not in (PASS, FAIL, CORRECTED_PASS):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == CORRECTED_PASS and self.identity_id not in ERRATA:
            raise ValueError(f"{self.identity_id} is not on the errata list")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        return {"identity_id": self.identity_id, "parameters": self.parameters,
                "status": self.status, "lhs": self.lhs, "rhs": self.rhs, "note": self.note}

    def to_jsonl(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _ser(value):
    """JSON-friendly rendering of exact and numeric values."""
    if isinstance(value, (RationalFunction, Polynomial)):
        return value.to_json()
    if isinstance(value, (int, Fraction)):
        return fraction_to_str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_ser(v) for v in value]
    if isinstance(value, dict):
        return {k: _ser(v) for k, v in value.items()}
    if hasattr(value, "to_json"):
        return value.to_json()
    return value


def _report(identity_id, params, ok, lhs, rhs, note=""):
    return IdentityReport(identity_id, _ser(params), PASS if ok else FAIL,
                          _ser(lhs), _ser(rhs), note)


def _errata_report(identity_id, params, truth, printed, corrected,
                   printed_ok: bool, corrected_ok: bool, note=""):
    if not corrected_ok:
        status = FAIL
    elif printed_ok:
        status = PASS
        note = "; ".join(filter(None, [note, "printed and corrected forms coincide here"]))
    else:
        status = CORRECTED_PASS
    return IdentityReport(identity_id, _ser(params), status, _ser(truth),
                          {"printed": _ser(printed), "corrected": _ser(corrected),
                           "printed_matches": printed_ok, "corrected_matches": corrected_ok},
                          note)


# -- Lyndon counting ---------------------------------------------------------

def check_witt_enumeration(k: int, n: int) -> IdentityReport:
    count = witt_count(k, n)
    words = enumerate_lyndon(k, n)
    ok = len(words) == count and all(w.is_lyndon() for w in words)
    return _report("witt-enumeration", {"k": k, "n": n}, ok, count, len(words))


def check_prime_power(k: int, p: int, m: int) -> IdentityReport:
    closed = prime_power_count(k, p, m)
    direct = witt_count(k, p**m)
    return _report("prime-power-formula", {"k": k, "p": p, "m": m}, closed == direct,
                   closed, direct)


def check_lyndon_series(p: int, K: int) -> IdentityReport:
    coeffs = lyndon_series_coeffs(p, K)
    direct = [Fraction(k**p - k, p) for k in range(K + 1)]
    low = coeffs[:2] == [0, 0][: K + 1]
    return _report("lyndon-series", {"p": p, "K": K}, coeffs == direct and low, coeffs, direct,
                   "series starts at k=0; L_0(p) = L_1(p) = 0")


def check_mobius_inversion(k: int, n: int) -> IdentityReport:
    lhs = k**n
    rhs = power_from_divisor_sum(k, n)
    return _report("mobius-inversion", {"k": k, "n": n}, lhs == rhs, lhs, rhs)


# -- generating functions of L_k(p) ------------------------------------------

def lyndon_gf_direct(p: int) -> RationalFunction:
    """(1/p) (sum k^p t^k - sum k t^k), each sum from repeated t d/dt."""
    return (geometric_moment_gf(p) - geometric_moment_gf(1)) / p


def check_gf_theorem(p: int, K: int) -> IdentityReport:
    """f_Ly(t, p) = B_2(t)/(2p) - B_{p+1}(t)/(p(p+1)), structurally and by
    Taylor coefficients through t^K."""
    built = lyndon_gf_closed_form(p)
    direct = lyndon_gf_direct(p)
    taylor = list(taylor_coeffs(built, K + 1))
    series = lyndon_series_coeffs(p, K)
    ok = built == direct and taylor == series
    return _report("gf-theorem", {"p": p, "K": K}, ok, built, direct)


def check_gf_remark_p2_label() -> IdentityReport:
    """The p = 2 remark states t^2/(1-t)^3 under the label f_Ly(t, 3)."""
    t = RationalFunction.variable("t")
    stated = t**2 / (1 - t) ** 3
    f3, f2 = lyndon_gf_closed_form(3), lyndon_gf_closed_form(2)
    return _errata_report("gf-remark-p2-label", {"p": 2}, stated, f3, f2,
                          printed_ok=stated == f3, corrected_ok=stated == f2,
                          note="label f_Ly(t,3) read as f_Ly(t,2)")


def check_gf_remark_p3() -> IdentityReport:
    t = RationalFunction.variable("t")
    stated = 2 * t**2 / (t - 1) ** 4
    f3 = lyndon_gf_closed_form(3)
    return _report("gf-remark-p3", {"p": 3}, stated == f3, stated, f3)


def _h_at_reciprocal(n: int) -> RationalFunction:
    t = RationalFunction.variable("t")
    return frobenius_euler(n).compose(1 / t)


def check_frobenius_theorem(p: int) -> IdentityReport:
    """f_Ly(t,p) via Frobenius-Euler numbers at 1/t.

    Printed: t (H_1(1/t) - H_p(1/t)) / p.
    Corrected: (H_1(1/t) - H_p(1/t)) / (p (t - 1)).
    """
    t = RationalFunction.variable("t")
    diff = _h_at_reciprocal(1) - _h_at_reciprocal(p)
    printed = t * diff / p
    corrected = diff / (p * (t - 1))
    truth = lyndon_gf_closed_form(p)
    return _errata_report("frobenius-lyndon-theorem", {"p": p}, truth, printed, corrected,
                          printed_ok=printed == truth, corrected_ok=corrected == truth)


def check_euler_corollary(p: int) -> IdentityReport:
    """f_Ly(-1,p) against (E_p - E_1)/p (printed) and (E_p - E_1)/(2p)."""
    truth = rf_eval(lyndon_gf_closed_form(p), Fraction(-1))
    diff = euler_number(p) - euler_number(1)
    printed, corrected = diff / p, diff / (2 * p)
    note = "E_p = E_1 here, so both sides vanish" if diff == 0 else ""
    return _errata_report("euler-corollary", {"p": p}, truth, printed, corrected,
                          printed_ok=printed == truth, corrected_ok=corrected == truth,
                          note=note)


# -- Apostol-Bernoulli family ------------------------------------------------

def printed_apostol_table() -> list[RationalFunction]:
    """B_0(z) .. B_6(z) exactly as tabulated."""
    z = Z_FIELD.gen()
    w = z - 1
    return [
        Z_FIELD.zero(),
        1 / w,
        -2 * z / w**2,
        3 * z * (z + 1) / w**3,
        -4 * z * (z**2 + 4 * z + 1) / w**4,
        5 * z * (z**3 + 11 * z**2 + 11 * z + 1) / w**5,
        -6 * z * (z**4 + 26 * z**3 + 66 * z**2 + 26 * z + 1) / w**6,
    ]


def check_apostol_table(n: int) -> IdentityReport:
    printed = printed_apostol_table()[n]
    computed = apostol_bernoulli_number(n)
    return _report("apostol-number-table", {"n": n}, printed == computed, computed, printed)


def _xpoly(coeffs) -> Polynomial:
    return Polynomial(coeffs, Z_FIELD, "x")


def printed_apostol_poly_table() -> list[Polynomial]:
    """B_0(z,x) .. B_3(z,x) as typeset (polynomials in x over QQ(z))."""
    z = Z_FIELD.gen()
    w = z - 1
    return [
        _xpoly([]),
        _xpoly([1 / w]),
        _xpoly([-2 * z / w**2, 1 / w]),
        _xpoly([3 * z * (z - 1) / w**3, -6 * z / w**2, 9 * z * (z - 1) / w**3]),
    ]


def corrected_apostol_poly_table() -> list[Polynomial]:
    z = Z_FIELD.gen()
    w = z - 1
    return [
        _xpoly([]),
        _xpoly([1 / w]),
        _xpoly([-2 * z / w**2, 2 / w]),
        _xpoly([3 * z * (z + 1) / w**3, -6 * z / w**2, 3 / w]),
    ]


def check_apostol_poly_table(n: int) -> IdentityReport:
    truth = apostol_bernoulli_poly_symbolic(n)
    printed = printed_apostol_poly_table()[n]
    corrected = corrected_apostol_poly_table()[n]
    return _errata_report("apostol-polynomial-table", {"n": n}, truth, printed, corrected,
                          printed_ok=printed == truth, corrected_ok=corrected == truth)


def check_apostol_binomial(n: int, x) -> IdentityReport:
    """B_n(x,z) = sum_j C(n,j) x^{n-j} B_j(z), and B_n(0,z) = B_n(z)."""
    x = Fraction(x)
    series = apostol_bernoulli_poly(n, x)
    binom = apostol_bernoulli_poly_binomial(n, x)
    ok = series == binom
    if x == 0:
        ok = ok and series == apostol_bernoulli_number(n)
    return _report("apostol-binomial", {"n": n, "x": x}, ok, series, binom,
                   "x_j^{m-j} read as x^{m-j}")


def check_frobenius_apostol(n: int) -> IdentityReport:
    """B_n(z) against n/z^{-1} H_{n-1}(1/z) (printed) and n/(z-1) H_{n-1}(1/z)."""
    truth = apostol_bernoulli_number(n)
    printed = apostol_via_frobenius_printed(n)
    corrected = apostol_via_frobenius(n)
    return _errata_report("frobenius-apostol-relation", {"n": n}, truth, printed, corrected,
                          printed_ok=printed == truth, corrected_ok=corrected == truth)


def check_frobenius_euler_specialization(n: int) -> IdentityReport:
    lhs = rf_eval(frobenius_euler(n), Fraction(-1))
    rhs = euler_number(n)
    return _report("frobenius-euler-specialization", {"n": n}, lhs == rhs, lhs, rhs)


def check_unified_y_apostol(n: int) -> IdentityReport:
    y = unified_Y(n, 0, 1, 1, 1).with_var("z")
    b = apostol_bernoulli_number(n)
    return _report("unified-y-apostol", {"n": n}, y == b, y, b)


# -- zeta functions ----------------------------------------------------------

def check_zeta_y_relation(n: int, k: int, a, b: int, beta, x) -> IdentityReport:
    """zeta_beta(1-n, x; k, a, b) = (-1)^k (n-1)!/(n+k-1)! Y_{n+k-1,beta}(x; k, a, b)."""
    series, exact = zeta_special_value(n, x, k, a, b, beta)
    err = abs(series.value - float(exact))
    ok = err <= series.error_bound and err <= ZETA_BRIDGE_TOL
    params = {"n": n, "k": k, "a": Fraction(a), "b": b, "beta": Fraction(beta),
              "x": Fraction(x)}
    return _report("zeta-y-relation", params, ok, {"series": series, "difference": err}, exact)


def check_zeta_y_remark(m: int, t) -> IdentityReport:
    """zeta_t(-m, 0; 1, 1, 1) = -Y_{1+m,t}(0; 1, 1, 1)/(1+m)."""
    t = Fraction(t)
    params = ZetaParams(beta=complex(t), s=complex(-m), x=0.0, k=1, a=1.0, b=1.0)
    series = unified_zeta(params)
    exact = -unified_Y(m + 1, 0, 1, 1, 1)(t) / (m + 1)
    err = abs(series.value - float(exact))
    return _report("zeta-y-remark", {"m": m, "t": t}, err <= series.error_bound,
                   {"series": series, "difference": err}, exact)


def check_zeta_power_sum(m: int, t=Fraction(1, 2)) -> IdentityReport:
    """sum_{n>=0} n^m t^n = -B_{m+1}(t)/(m+1).

    The corrected reading (n^m) is checked as an exact identity of rational
    functions; the printed n^s (s = -m) is summed numerically at t.
    """
    t = Fraction(t)
    rhs = -apostol_bernoulli_number(m + 1).with_var("t") / (m + 1)
    corrected = geometric_moment_gf(m)
    target = rf_eval(rhs, t)
    if m == 0:
        printed_value = phi_lerch(float(t), 0, 0).value.real
    else:
        # n = 0 term is 0^{-m}, undefined; sum from n = 1
        printed_value = float(t) * phi_lerch(float(t), m, 1).value.real
    printed_ok = abs(printed_value - float(target)) <= 1e-9
    return _errata_report("zeta-power-sum-remark", {"m": m, "t": t}, rhs,
                          printed_value, corrected,
                          printed_ok=printed_ok, corrected_ok=corrected == rhs,
                          note="printed n^s with s = -m read as n^m")


def check_zeta_phi_relation(params: ZetaParams) -> IdentityReport:
    direct, via_phi = unified_zeta(params, method="both")
    err = abs(direct.value - via_phi.value)
    ok = err <= direct.error_bound + via_phi.error_bound
    p = {"beta": complex(params.beta), "s": complex(params.s), "x": params.x,
         "k": params.k, "a": params.a, "b": params.b}
    return _report("zeta-phi-relation", p, ok, {"direct": direct, "difference": err}, via_phi)


def check_riemann_hurwitz(s) -> IdentityReport:
    """zeta(s) = Phi(1, s, 1) and zeta(s, 2) = zeta(s) - 1; closed forms at s = 2, 4."""
    s = complex(s)
    r = riemann_zeta(s)
    phi = phi_lerch(1, s, 1)
    h2 = hurwitz_zeta(s, 2.0)
    ok = abs(r.value - phi.value) <= r.error_bound + phi.error_bound
    ok = ok and abs(h2.value - (r.value - 1)) <= r.error_bound + h2.error_bound + 1e-15
    known = {2: math.pi**2 / 6, 4: math.pi**4 / 90}
    if s.imag == 0 and s.real in known:
        ok = ok and abs(r.value - known[s.real]) <= r.error_bound + 1e-15
    return _report("zeta-riemann-hurwitz", {"s": s}, ok, r, h2)


# -- Bernoulli power sums ----------------------------------------------------

def check_bernoulli_power_sum(n: int, m: int) -> IdentityReport:
    lhs = sum(k**n for k in range(m + 1))
    rhs = (bernoulli_poly(n + 1)(Fraction(m + 1)) - bernoulli_number(n + 1)) / (n + 1)
    return _report("bernoulli-power-sum", {"n": n, "m": m}, lhs == rhs, lhs, rhs)


def check_powersum_theorem(n: int, m: int) -> IdentityReport:
    """sum_{d|n} d sum_{k=0}^m L_k(d) = (B_{n+1}(m+1) - B_{n+1})/(n+1)."""
    lhs = Fraction(sum(d * sum(witt_count(k, d) for k in range(m + 1)) for d in divisors(n)))
    rhs = (bernoulli_poly(n + 1)(Fraction(m + 1)) - bernoulli_number(n + 1)) / (n + 1)
    direct = sum(k**n for k in range(m + 1))
    ok = lhs == rhs == direct and rhs.denominator == 1
    return _report("power-sum-theorem", {"n": n, "m": m}, ok, lhs, rhs)


# -- catalogue ---------------------------------------------------------------

@dataclass
class VerifyConfig:
    """Parameter grids for ``run_all``."""

    primes: tuple[int, ...] = (2, 3, 5, 7, 11, 13)
    K: int = 49
    only: tuple[str, ...] | None = None
    witt_k_max: int = 4
    witt_n_max: int = 8
    witt_binary_n_max: int = 14
    special_n_max: int = 20
    powersum_n_max: int = 8
    powersum_m_max: int = 20
    zeta_grid_points: int = 100
    seed: int = 20160101
    extra: dict = field(default_factory=dict)


def zeta_random_grid(count: int, seed: int) -> list[ZetaParams]:
    """Valid unified-zeta parameters (|beta^b/a^b| <= 0.9), reproducible from seed."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = rng.uniform(0.5, 3.0)
        b = rng.uniform(0.3, 3.0)
        radius = rng.uniform(0.0, 0.9) ** (1 / b) * a
        beta = complex(radius * math.cos(rng.uniform(-math.pi, math.pi)),
                       radius * math.sin(rng.uniform(-math.pi, math.pi)))
        s = complex(rng.uniform(-4.0, 4.0), rng.uniform(-3.0, 3.0))
        x = rng.uniform(0.2, 3.0)
        k = rng.randint(0, 3)
        p = ZetaParams(beta=beta, s=s, x=x, k=k, a=a, b=b)
        if abs(p.ratio()) < 0.9:
            out.append(p)
    return out


def _grids(cfg: VerifyConfig) -> list[tuple[str, Callable[[], list[IdentityReport]]]]:
    primes = tuple(cfg.primes)
    third, half = Fraction(1, 3), Fraction(1, 2)

    def witt():
        pts = [(k, n) for k in range(2, cfg.witt_k_max + 1) for n in range(1, cfg.witt_n_max + 1)]
        pts += [(2, n) for n in range(cfg.witt_n_max + 1, cfg.witt_binary_n_max + 1)]
        return [check_witt_enumeration(k, n) for k, n in pts]

    return [
        ("witt-enumeration", witt),
        ("prime-power-formula", lambda: [check_prime_power(k, p, m) for p in (2, 3, 5)
                                         for m in (1, 2, 3) for k in range(2, 11)]),
        ("lyndon-series", lambda: [check_lyndon_series(p, cfg.K) for p in primes]),
        ("mobius-inversion", lambda: [check_mobius_inversion(k, n) for k in range(11)
                                      for n in range(1, 31)]),
        ("apostol-number-table", lambda: [check_apostol_table(n) for n in range(7)]),
        ("apostol-polynomial-table", lambda: [check_apostol_poly_table(n) for n in range(4)]),
        ("apostol-binomial", lambda: [check_apostol_binomial(n, x) for n in range(11)
                                      for x in (0, 1, 2, -1, half)]),
        ("frobenius-apostol-relation",
         lambda: [check_frobenius_apostol(n) for n in range(1, cfg.special_n_max + 1)]),
        ("frobenius-euler-specialization",
         lambda: [check_frobenius_euler_specialization(n) for n in range(cfg.special_n_max + 1)]),
        ("unified-y-apostol", lambda: [check_unified_y_apostol(n) for n in range(13)]),
        ("gf-theorem", lambda: [check_gf_theorem(p, cfg.K) for p in primes]),
        ("gf-remark-p2-label", lambda: [check_gf_remark_p2_label()]),
        ("gf-remark-p3", lambda: [check_gf_remark_p3()]),
        ("frobenius-lyndon-theorem", lambda: [check_frobenius_theorem(p) for p in primes]),
        ("euler-corollary", lambda: [check_euler_corollary(p) for p in primes]),
        ("zeta-power-sum-remark", lambda: [check_zeta_power_sum(m) for m in range(11)]),
        ("zeta-y-remark", lambda: [check_zeta_y_remark(m, t) for m in range(7)
                                   for t in (half, third, -third)]),
        ("zeta-y-relation", lambda: [check_zeta_y_relation(n, k, a, 1, beta, x)
                                     for n in range(1, 7) for k in (0, 1, 2) for a in (1, 2)
                                     for beta in (third, -third, half) for x in (1, 2)]),
        ("zeta-phi-relation", lambda: [check_zeta_phi_relation(p) for p in
                                       zeta_random_grid(cfg.zeta_grid_points, cfg.seed)]),
        ("zeta-riemann-hurwitz", lambda: [check_riemann_hurwitz(s)
                                          for s in (2, 3, 4, 2.5 + 1j, 1.5 - 3j)]),
        ("bernoulli-power-sum", lambda: [check_bernoulli_power_sum(n, m)
                                         for n in range(1, cfg.powersum_n_max + 1)
                                         for m in range(cfg.powersum_m_max + 1)]),
        ("power-sum-theorem", lambda: [check_powersum_theorem(n, m)
                                       for n in range(1, cfg.powersum_n_max + 1)
                                       for m in range(cfg.powersum_m_max + 1)]),
    ]


CATALOGUE = tuple(name for name, _ in _grids(VerifyConfig()))


def aggregate(identity_id: str, reports: list[IdentityReport]) -> IdentityReport:
    """Fold per-point reports: any fail -> fail; else any corrected-pass ->
    corrected-pass; else pass."""
    statuses = {r.status for r in reports}
    if FAIL in statuses or not reports:
        status = FAIL
    elif CORRECTED_PASS in statuses:
        status = CORRECTED_PASS
    else:
        status = PASS
    failing = [r.parameters for r in reports if r.status == FAIL]
    notes = sorted({r.note for r in reports if r.note})
    note = "; ".join(notes)
    if failing:
        note = f"failing points: {json.dumps(failing)}" + (f"; {note}" if note else "")
    return IdentityReport(identity_id, {"points": [r.parameters for r in reports]}, status,
                          [r.lhs for r in reports], [r.rhs for r in reports], note)


def run_all(config: VerifyConfig | None = None) -> list[IdentityReport]:
    """One aggregated report per catalogued identity, in catalogue order."""
    cfg = config or VerifyConfig()
    out = []
    for name, run in _grids(cfg):
        if cfg.only is not None and name not in cfg.only:
            continue
        out.append(aggregate(name, run()))
    return out


def summarize(reports: list[IdentityReport]) -> dict:
    counts = {PASS: 0, CORRECTED_PASS: 0, FAIL: 0}
    for r in reports:
        counts[r.status] += 1
    return {"total": len(reports), "pass": counts[PASS],
            "corrected_pass": counts[CORRECTED_PASS], "fail": counts[FAIL],
            "status": FAIL if counts[FAIL] else PASS,
            "corrected": [r.identity_id for r in reports if r.status == CORRECTED_PASS]}
