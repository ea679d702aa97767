"""Command-line front end.

Every command builds a JSON-safe ``inputs`` dict, runs it through
``run_command`` and prints either a short human-readable table or, with
``--json``, the output envelope. Re-running ``run_command`` on an
envelope's ``command`` and ``inputs`` reproduces its ``result``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .algebra import PoleError, fraction_to_str
from .identities import CATALOGUE, VerifyConfig, run_all, summarize
from .lyndon import (
    DEFAULT_ENUM_BUDGET,
    BudgetExceededError,
    enumerate_lyndon,
    lyndon_gf_closed_form,
    lyndon_series_coeffs,
    prime_power_count,
    witt_count,
)
from .numtheory import prime_power_decomposition
from .special import (
    apostol_bernoulli_number,
    apostol_bernoulli_poly,
    apostol_bernoulli_poly_symbolic,
    bernoulli_number,
    bernoulli_poly,
    euler_number,
    frobenius_euler,
    unified_Y,
)
from .zeta import (
    DEFAULT_TOL,
    DivergenceError,
    ZetaParams,
    hurwitz_zeta,
    phi_lerch,
    riemann_zeta,
    unified_zeta,
    zeta_special_value,
)

FORMAT_VERSION = "1.0"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_DIVERGENT = 3
EXIT_IDENTITY_FAIL = 4


class UsageError(ValueError):
    pass


class InternalError(RuntimeError):
    pass


def enum_budget() -> int:
    raw = os.environ.get("LYNDON_ENUM_BUDGET")
    if raw is None:
        return DEFAULT_ENUM_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"LYNDON_ENUM_BUDGET must be an integer, got {raw!r}") from None


def _rf_payload(f) -> dict:
    return {"text": str(f), **f.to_json()}


# -- command implementations -------------------------------------------------

def _count(inp):
    k, n = inp["k"], inp["n"]
    out = {"count": str(witt_count(k, n))}
    if inp.get("closed_form"):
        pm = prime_power_decomposition(n)
        if pm is None:
            raise UsageError(f"--closed-form needs n to be a prime power, got {n}")
        closed = prime_power_count(k, *pm)
        out["closed_form"] = str(closed)
        out["agree"] = str(closed) == out["count"]
        if not out["agree"]:
            raise InternalError(f"closed form {closed} disagrees with {out['count']}")
    return out


def _enumerate(inp):
    words = enumerate_lyndon(inp["k"], inp["n"], budget=enum_budget())
    limit = inp.get("limit")
    shown = words if limit is None else words[:limit]
    return {"count": len(words), "words": [w.serialize() for w in shown],
            "truncated": len(shown) < len(words)}


def _series(inp):
    return {"coefficients": [fraction_to_str(c) for c in lyndon_series_coeffs(inp["p"], inp["K"])]}


def _gf(inp):
    return _rf_payload(lyndon_gf_closed_form(inp["p"]))


def _special_one(family, n, inp):
    if family == "bernoulli":
        if inp.get("poly"):
            p = bernoulli_poly(n)
            return {"n": n, "text": str(p), "coefficients": p.to_json()}
        return {"n": n, "value": fraction_to_str(bernoulli_number(n))}
    if family == "euler":
        return {"n": n, "value": fraction_to_str(euler_number(n))}
    if family == "frobenius":
        return {"n": n, **_rf_payload(frobenius_euler(n))}
    if family == "apostol":
        if inp.get("symbolic"):
            p = apostol_bernoulli_poly_symbolic(n)
            return {"n": n, "text": str(p), "coefficients": p.to_json()}
        if inp.get("x") is not None:
            return {"n": n, **_rf_payload(apostol_bernoulli_poly(n, Fraction(inp["x"])))}
        return {"n": n, **_rf_payload(apostol_bernoulli_number(n))}
    if family == "unified-y":
        b = Fraction(inp.get("b", "1"))
        if b.denominator != 1:
            raise UsageError("b must be a positive integer for exact Y values")
        y = unified_Y(n, Fraction(inp.get("x", "0")), int(inp.get("k", 1)),
                      Fraction(inp.get("a", "1")), int(b))
        return {"n": n, **_rf_payload(y)}
    raise UsageError(f"unknown family {family!r}")


def _special(inp):
    family, n = inp["family"], inp["n"]
    if inp.get("table"):
        return {"family": family, "table": [_special_one(family, i, inp) for i in range(n + 1)]}
    return {"family": family, **_special_one(family, n, inp)}


def _zeta(inp):
    sub, tol = inp["subcommand"], float(inp.get("tol", DEFAULT_TOL))
    if sub == "phi":
        return phi_lerch(complex(inp["z"]), complex(inp["s"]), float(inp["a"]), tol).to_json()
    if sub == "hurwitz":
        return hurwitz_zeta(complex(inp["s"]), float(inp["a"]), tol).to_json()
    if sub == "riemann":
        return riemann_zeta(complex(inp["s"]), tol).to_json()
    if sub == "unified":
        params = ZetaParams(beta=complex(inp["beta"]), s=complex(inp["s"]), x=float(inp["x"]),
                            k=int(inp["k"]), a=float(inp["a"]), b=float(inp["b"]))
        if inp.get("both"):
            d, p = unified_zeta(params, tol, "both")
            return {"direct": d.to_json(), "phi": p.to_json(),
                    "difference": abs(d.value - p.value),
                    "agree": abs(d.value - p.value) <= d.error_bound + p.error_bound}
        return unified_zeta(params, tol).to_json()
    if sub == "special":
        b = Fraction(inp["b"])
        if b.denominator != 1:
            raise UsageError("b must be a positive integer")
        series, exact = zeta_special_value(int(inp["n"]), Fraction(inp["x"]), int(inp["k"]),
                                           Fraction(inp["a"]), int(b), Fraction(inp["beta"]),
                                           tol)
        diff = abs(series.value - float(exact))
        return {"series": series.to_json(), "formula": fraction_to_str(exact),
                "difference": diff, "agree": diff <= series.error_bound}
    raise UsageError(f"unknown zeta subcommand {sub!r}")


def _verify(inp):
    cfg = VerifyConfig()
    target = inp.get("identity") or "all"
    if target != "all":
        if target not in CATALOGUE:
            raise UsageError(f"unknown identity {target!r}; choose from {', '.join(CATALOGUE)}")
        cfg.only = (target,)
    for key in ("K", "special_n_max", "powersum_n_max", "powersum_m_max", "zeta_grid_points"):
        if inp.get(key) is not None:
            setattr(cfg, key, int(inp[key]))
    if inp.get("primes"):
        cfg.primes = tuple(int(p) for p in inp["primes"])
    reports = run_all(cfg)
    return {"summary": summarize(reports), "reports": [r.to_json() for r in reports]}


COMMANDS = {
    "count": _count,
    "enumerate": _enumerate,
    "series": _series,
    "gf": _gf,
    "special": _special,
    "zeta": _zeta,
    "verify": _verify,
}


def run_command(command: str, inputs: dict) -> dict:
    if command not in COMMANDS:
        raise UsageError(f"unknown command {command!r}")
    return COMMANDS[command](inputs)


def envelope(command: str, inputs: dict) -> dict:
    return {"command": command, "inputs": inputs, "result": run_command(command, inputs),
            "format_version": FORMAT_VERSION}


# -- argument parsing -----------------------------------------------------------

def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _pos(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _rational(text):
    try:
        return fraction_to_str(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text}") from None


def _complex(text):
    try:
        complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a complex number, got {text}") from None
    return text.replace(" ", "")


def _primes_list(text):
    try:
        return [int(p) for p in text.split(",") if p]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated primes, got {text}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print the JSON output envelope")

    parser = argparse.ArgumentParser(
        prog="lyndonzeta", parents=[common],
        description="Lyndon word counts, Apostol-Bernoulli numbers and Lerch-type zeta values.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="L_k(n) by the Moebius divisor sum")
    p.add_argument("k", type=_nonneg)
    p.add_argument("n", type=_pos)
    p.add_argument("--closed-form", action="store_true",
                   help="also evaluate the prime-power closed form (n = p^m)")

    p = sub.add_parser("enumerate", parents=[common], help="list Lyndon words by brute force")
    p.add_argument("k", type=_pos)
    p.add_argument("n", type=_pos)
    p.add_argument("--limit", type=_nonneg)

    p = sub.add_parser("series", parents=[common], help="L_0(p), ..., L_K(p)")
    p.add_argument("p", type=_pos)
    p.add_argument("K", type=_nonneg)

    p = sub.add_parser("gf", parents=[common], help="closed-form generating function f_Ly(t, p)")
    p.add_argument("p", type=_pos)

    p = sub.add_parser("special", parents=[common], help="special numbers and polynomials")
    p.add_argument("family", choices=["bernoulli", "euler", "frobenius", "apostol", "unified-y"])
    p.add_argument("n", type=_nonneg)
    p.add_argument("--table", action="store_true", help="all indices 0..n")
    p.add_argument("--poly", action="store_true", help="bernoulli: the polynomial B_n(x)")
    p.add_argument("--symbolic", action="store_true", help="apostol: B_n(x, z) symbolic in x")
    p.add_argument("--x", type=_rational)
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--a", type=_rational)
    p.add_argument("--b", type=_rational)

    p = sub.add_parser("zeta", parents=[common], help="numeric zeta-type functions")
    zsub = p.add_subparsers(dest="subcommand", required=True)
    z = zsub.add_parser("phi", parents=[common], help="Hurwitz-Lerch Phi(z, s, a)")
    z.add_argument("--z", type=_complex, required=True)
    z.add_argument("--s", type=_complex, required=True)
    z.add_argument("--a", type=float, required=True)
    z = zsub.add_parser("hurwitz", parents=[common], help="zeta(s, a), Re(s) > 1")
    z.add_argument("--s", type=_complex, required=True)
    z.add_argument("--a", type=float, default=1.0)
    z = zsub.add_parser("riemann", parents=[common], help="zeta(s), Re(s) > 1")
    z.add_argument("--s", type=_complex, required=True)
    z = zsub.add_parser("unified", parents=[common], help="zeta_beta(s, x; k, a, b)")
    z.add_argument("--beta", type=_complex, required=True)
    z.add_argument("--s", type=_complex, required=True)
    z.add_argument("--x", type=float, default=1.0)
    z.add_argument("--k", type=_nonneg, default=1)
    z.add_argument("--a", type=float, default=1.0)
    z.add_argument("--b", type=float, default=1.0)
    z.add_argument("--both", action="store_true", help="direct sum and the Phi route")
    z = zsub.add_parser("special", parents=[common],
                        help="zeta_beta(1-n, x; k, a, b) against the exact Y formula")
    z.add_argument("--n", type=_pos, required=True)
    z.add_argument("--x", type=_rational, default="1")
    z.add_argument("--k", type=_nonneg, default=1)
    z.add_argument("--a", type=_rational, default="1")
    z.add_argument("--b", type=_rational, default="1")
    z.add_argument("--beta", type=_rational, required=True)
    for name in ("phi", "hurwitz", "riemann", "unified", "special"):
        zsub.choices[name].add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = sub.add_parser("verify", parents=[common], help="run the identity catalogue")
    p.add_argument("identity", nargs="?", default="all",
                   help=f"'all' or one of: {', '.join(CATALOGUE)}")
    p.add_argument("--primes", type=_primes_list)
    p.add_argument("--K", type=_nonneg)
    p.add_argument("--special-n-max", type=_nonneg)
    p.add_argument("--powersum-n-max", type=_pos)
    p.add_argument("--powersum-m-max", type=_nonneg)
    p.add_argument("--zeta-grid-points", type=_nonneg)
    p.add_argument("--jsonl", action="store_true", help="one JSON report per line")
    return parser


def _inputs_from_args(ns: argparse.Namespace) -> dict:
    skip = {"command", "json", "jsonl"}
    inputs = {k: v for k, v in vars(ns).items() if k not in skip and v is not None}
    if ns.command == "verify":
        inputs["identity"] = ns.identity
    return {k: v for k, v in inputs.items() if v is not False}


# -- human-readable output ------------------------------------------------------

def _render(command: str, inputs: dict, result: dict) -> str:
    if command == "count":
        line = f"L_{inputs['k']}({inputs['n']}) = {result['count']}"
        if "closed_form" in result:
            line += f"\nclosed form = {result['closed_form']}  agree: {result['agree']}"
        return line
    if command == "enumerate":
        lines = [str(w) if isinstance(w, str) else json.dumps(w) for w in result["words"]]
        lines.append(f"# {result['count']} Lyndon words" +
                     (" (truncated)" if result["truncated"] else ""))
        return "\n".join(lines)
    if command == "series":
        return "\n".join(f"L_{k}({inputs['p']}) = {c}"
                         for k, c in enumerate(result["coefficients"]))
    if command == "gf":
        return f"f_Ly(t, {inputs['p']}) = {result['text']}"
    if command == "special":
        rows = result.get("table") or [result]
        fam = inputs["family"]
        return "\n".join(f"{fam}[{r['n']}] = {r.get('value', r.get('text'))}" for r in rows)
    if command == "zeta":
        if "direct" in result:
            d, p = result["direct"], result["phi"]
            return (f"direct: {_cstr(d['value'])} +/- {d['error_bound']:.3g}\n"
                    f"phi:    {_cstr(p['value'])} +/- {p['error_bound']:.3g}\n"
                    f"agree: {result['agree']}")
        if "series" in result:
            s = result["series"]
            return (f"series:  {_cstr(s['value'])} +/- {s['error_bound']:.3g}\n"
                    f"formula: {result['formula']}\nagree: {result['agree']}")
        return (f"value: {_cstr(result['value'])}\nerror bound: {result['error_bound']:.3g}\n"
                f"terms: {result['terms']}")
    if command == "verify":
        width = max((len(r["identity_id"]) for r in result["reports"]), default=10)
        lines = [f"{r['identity_id']:<{width}}  {r['status']}" for r in result["reports"]]
        s = result["summary"]
        lines.append(f"# {s['total']} identities: {s['pass']} pass, "
                     f"{s['corrected_pass']} corrected-pass, {s['fail']} fail")
        return "\n".join(lines)
    return json.dumps(result, indent=2)


def _cstr(v) -> str:
    re_, im = v
    return f"{re_:.15g}" if im == 0 else f"{re_:.15g}{im:+.15g}j"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    command = ns.command
    inputs = _inputs_from_args(ns)
    try:
        env = envelope(command, inputs)
    except (DivergenceError, PoleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIVERGENT
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, BudgetExceededError, ValueError, TypeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if getattr(ns, "jsonl", False):
        for r in env["result"]["reports"]:
            print(json.dumps(r, sort_keys=True))
        print(json.dumps({"summary": env["result"]["summary"]}, sort_keys=True))
    elif getattr(ns, "json", False):
        print(json.dumps(env, indent=2))
    else:
        print(_render(command, inputs, env["result"]))

    if command == "verify" and env["result"]["summary"]["fail"]:
        return EXIT_IDENTITY_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
