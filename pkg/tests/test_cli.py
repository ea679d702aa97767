import json
import subprocess
import sys

import pytest

from lyndonzeta.cli import envelope, main, run_command


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_count(capsys):
    code, env = run_json(capsys, "count", "2", "5")
    assert code == 0 and env["result"]["count"] == "6"
    assert env["format_version"] == "1.0" and env["command"] == "count"
    _, env = run_json(capsys, "count", "2", "1")
    assert env["result"]["count"] == "2"
    _, env = run_json(capsys, "count", "2", "4", "--closed-form")
    assert env["result"] == {"count": "3", "closed_form": "3", "agree": True}


def test_count_closed_form_needs_prime_power(capsys):
    assert main(["count", "2", "6", "--closed-form"]) == 2


def test_big_integers_print_in_full(capsys):
    main(["count", "10", "40"])
    out = capsys.readouterr().out
    assert "e+" not in out and str((10**40 - 10**20) // 40)[:10] in out.replace(",", "")


def test_enumerate_series_gf(capsys):
    _, env = run_json(capsys, "enumerate", "2", "3")
    assert env["result"]["words"] == ["001", "011"]
    _, env = run_json(capsys, "series", "2", "5")
    assert env["result"]["coefficients"] == ["0", "0", "1", "3", "6", "10"]
    _, env = run_json(capsys, "gf", "2")
    assert env["result"]["num"] == ["0", "0", "-1"]
    assert env["result"]["den"] == ["-1", "3", "-3", "1"]


def test_special(capsys):
    _, env = run_json(capsys, "special", "apostol", "2")
    assert env["result"]["text"] == "-2z/(z - 1)^2"
    main(["special", "apostol", "2"])
    assert "-2z/(z - 1)^2" in capsys.readouterr().out
    _, env = run_json(capsys, "special", "bernoulli", "12")
    assert "-691/2730" in json.dumps(env["result"])


def test_zeta_phi(capsys):
    code, env = run_json(capsys, "zeta", "phi", "--z", "0.5", "--s", "0", "--a", "1")
    assert code == 0
    re, im = env["result"]["value"]
    assert abs(re - 2) <= env["result"]["error_bound"] <= 1e-10 and im == 0


def test_exit_codes(capsys):
    assert main(["count", "2", "zero"]) == 2
    assert main(["bogus"]) == 2
    assert main(["zeta", "phi", "--z", "2", "--s", "1", "--a", "1"]) == 3
    assert main(["zeta", "riemann", "--s", "1"]) == 3
    assert main(["verify", "no-such-identity"]) == 2
    err = capsys.readouterr().err
    assert "error" in err


def test_enumeration_budget_env(monkeypatch, capsys):
    monkeypatch.setenv("LYNDON_ENUM_BUDGET", "100")
    assert main(["enumerate", "2", "8"]) == 2
    monkeypatch.setenv("LYNDON_ENUM_BUDGET", "1000")
    assert main(["enumerate", "2", "8"]) == 0


@pytest.mark.parametrize("argv", [
    ["count", "3", "8"],
    ["enumerate", "3", "3"],
    ["series", "5", "7"],
    ["gf", "3"],
    ["special", "frobenius", "4"],
    ["special", "unified-y", "3", "--k", "0", "--x", "1/2", "--a", "2"],
    ["zeta", "unified", "--beta", "0.3", "--s", "-2", "--x", "1.5", "--both"],
    ["verify", "euler-corollary"],
])
def test_envelope_round_trip(capsys, argv):
    code, env = run_json(capsys, *argv)
    assert code == 0
    again = json.loads(json.dumps(envelope(env["command"], env["inputs"])))
    assert again == env
    assert json.loads(json.dumps(run_command(env["command"], env["inputs"]))) == env["result"]


def test_verify_all_subprocess():
    proc = subprocess.run([sys.executable, "-m", "lyndonzeta", "verify", "all", "--json"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    summary = json.loads(proc.stdout)["result"]["summary"]
    assert summary["fail"] == 0 and summary["corrected_pass"] == 6


def test_verify_jsonl(capsys):
    assert main(["verify", "gf-remark-p3", "--jsonl"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert json.loads(lines[0])["identity_id"] == "gf-remark-p3"
    assert json.loads(lines[-1])["summary"]["fail"] == 0
