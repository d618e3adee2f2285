import io
import json
import os
import subprocess
import sys

import pytest

from eulerk.cli import CliConfig, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["eval", "B(C6)", "--char", "baez-dolan"], "-1/6"),
        (["eval", "point", "--char", "baez-dolan"], "1"),
        (["eval", "wedge(B(C3), B(C3))", "--char", "baez-dolan"], "-1/3"),
        (["eval", "B(C6)"], "-1/6"),
        (["eval", "B(S3)", "--char", "euler-rational"], "1"),
        (["eval", "B(S3)", "--char", "chi-K=C2"], "2"),
        (["eval", "susp(B(C2))", "--char", "chi-K=C2"], "0"),
        (["class", "B(C6)"], "[B C2] + [B C3] - [*]"),
        (["class", "empty"], "0"),
        (["class", "susp(B(C2))"], "2[*] - [B C2]"),
    ],
)
def test_plain_outputs(argv, expected):
    code, out, _ = run(*argv)
    assert code == 0
    assert out.strip() == expected


def test_eval_json():
    code, out, _ = run("eval", "wedge(B(C2), B(C3))", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "expression": "wedge(B(C2), B(C3))",
        "strategy": "assembly",
        "value": {"num": -1, "den": 6},
        "per_prime": {"2": {"num": 1, "den": 2}, "3": {"num": 1, "den": 3}},
    }


def test_eval_json_structural_has_no_primes():
    _, out, _ = run("eval", "B(C4)", "--char", "euler-rational", "--format", "json")
    doc = json.loads(out)
    assert doc["strategy"] == "direct-structural" and doc["per_prime"] == {}


def test_class_json_round_trip():
    from eulerk.spaces import K0Class, k0_class, parse

    _, out, _ = run("class", "wedge(B(C12), susp(B(Q8)))", "--format", "json")
    assert K0Class.from_json(json.loads(out)) == k0_class(parse("wedge(B(C12), susp(B(Q8)))"))


def test_values_file(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps([{"basis": "*", "value": "2"}, {"basis": "C2", "value": "1/3"}, {"basis": "C3", "value": 5}]))
    code, out, _ = run("eval", "B(C6)", "--char", f"file={path}")
    assert (code, out.strip()) == (0, "10/3")
    code, out, _ = run("eval", "B(C6)", "--values", str(path))
    assert (code, out.strip()) == (0, "10/3")


@pytest.mark.parametrize(
    "argv,fragment",
    [
        (["eval", "pushout(point)"], "line 1, column 1"),
        (["eval", "B(C40)"], "max order"),
        (["eval", "B(S3)"], "not nilpotent"),
        (["eval", "B(C2)", "--char", "nope"], "unknown characteristic"),
        (["eval", "B(C2)", "--char", "file=/nonexistent.json"], "cannot read"),
        (["class", "B(Q9)"], "unknown group"),
        (["group", "C0"], "error"),
        (["eval", "B(C7)", "--max-order", "5"], "max order 5"),
    ],
)
def test_input_errors_exit_1(argv, fragment):
    code, out, err = run(*argv)
    assert code == 1
    assert out == ""
    assert fragment in err


def test_missing_value_exit_1(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps([{"basis": "*", "value": 1}]))
    code, _, err = run("eval", "B(C2)", "--values", str(path))
    assert code == 1 and "no value for [B C2]" in err


def test_max_order_raises_cap():
    code, out, _ = run("eval", "B(C37)", "--max-order", "40", "--char", "euler-rational")
    assert (code, out.strip()) == (0, "1")


@pytest.mark.parametrize("suite", ["fibration-failure", "wall", "delta-oracle", "golden"])
def test_verify_passes(suite):
    code, out, _ = run("verify", suite)
    assert code == 0
    assert "PASS" in out


def test_verify_reports_inequality():
    _, out, _ = run("verify", "fibration-failure")
    assert "chi(B C6) = -1/6 != chi(B C2) * chi(B C3) = 1/6" in out
    _, out, _ = run("verify", "wall", "--format", "json")
    doc = json.loads(out)
    assert doc["passed"] and doc["first_counterexample"] is None


def test_verify_failure_exit_2(monkeypatch):
    from eulerk import verify

    def broken():
        res = verify.SuiteResult("wall")
        res.check(False, "2 * -1/6 != -1/2")
        return res

    monkeypatch.setitem(verify.SUITES, "wall", broken)
    code, out, _ = run("verify", "wall")
    assert code == 2
    assert "first counterexample: 2 * -1/6 != -1/2" in out


def test_group_and_mobius():
    code, out, _ = run("group", "C2xC3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["name"] == "C6" and doc["sylow"] == {"2": "C2", "3": "C3"}
    code, out, _ = run("mobius", "C2xC2")
    doc = json.loads(out)
    assert code == 0 and doc["mu"][0] == [1, -1, -1, -1, 2]


def test_config_validation():
    with pytest.raises(ValueError):
        CliConfig(max_order=0)
    with pytest.raises(ValueError):
        CliConfig(format="xml")


def test_console_entry_and_env_cap():
    env = dict(os.environ, EULERK_MAX_ORDER="8")
    r = subprocess.run([sys.executable, "-m", "eulerk", "eval", "B(C12)"], env=env, capture_output=True, text=True)
    assert r.returncode == 1 and "max order 8" in r.stderr
    r = subprocess.run([sys.executable, "-m", "eulerk", "eval", "B(C6)"], capture_output=True, text=True)
    assert (r.returncode, r.stdout.strip()) == (0, "-1/6")


def test_deterministic_output():
    outs = {run("mobius", "D4")[1] for _ in range(3)}
    assert len(outs) == 1
