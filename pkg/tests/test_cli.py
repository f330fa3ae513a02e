import json
import subprocess
import sys

import pytest

import qchanghee
from qchanghee import cli, combinat, suite
from qchanghee.combinat import StirlingTable
from qchanghee.exact import decode_ratfn, decode_ypoly
from qchanghee.qeuler import euler_q_number, euler_q_poly

SMALL_VERIFY = ["--max-n", "4", "--max-r", "2", "--d", "1,3", "--K", "12", "--M", "16",
                "--p", "3", "--N", "2", "--precision", "4"]


def call(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_changhee_json(capsys):
    code, out, _ = call(capsys, "compute", "changhee", "--n", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["object"] == "changhee" and obj["n"] == 2 and obj["r"] == 1
    assert obj["limit_q1"] == {"n": "1", "d": "2"}
    assert len(decode_ypoly(obj["poly"]).coeffs) == 3


def test_compute_euler_roundtrips_through_json(capsys):
    code, out, _ = call(capsys, "compute", "euler", "--n", "3")
    assert code == 0
    assert decode_ypoly(json.loads(out)["poly"]) == euler_q_poly(3)
    code, out, _ = call(capsys, "compute", "euler-number", "--n", "2")
    assert decode_ratfn(json.loads(out)["value"]) == euler_q_number(2)


@pytest.mark.parametrize("argv", [
    ["compute", "changhee", "--n", "3", "--r", "2"],
    ["compute", "changhee-direct", "--n", "3", "--form", "double_sum"],
    ["compute", "euler", "--n", "2", "--r", "3"],
    ["compute", "euler-rebased", "--n", "2", "--d", "3", "--a", "2"],
    ["compute", "classical-euler", "--n", "4"],
    ["compute", "classical-changhee", "--n", "4", "--format", "csv"],
    ["expand", "changhee", "--n", "3"],
    ["expand", "binomial", "--n", "3"],
    ["expand", "qseries", "--n", "2", "--x0", "1", "--K", "8", "--M", "10"],
    ["padic", "--p", "5", "--q0", "6", "--N", "3", "--M", "6", "--integrand", "bracket_power:n=2"],
    ["padic", "--p", "3", "--q0", "4", "--N", "2", "--M", "6", "--integrand", "bracket_power:n=1", "--r", "2"],
    ["table", "euler-limits", "--max-n", "5"],
    ["table", "changhee-numbers", "--max-n", "3", "--format", "csv"],
    ["table", "stirling2", "--max-n", "5"],
    ["verify", "carlitz"] + SMALL_VERIFY,
])
def test_commands_are_deterministic(capsys, argv):
    code1, out1, _ = call(capsys, *argv)
    qchanghee.clear_caches()
    code2, out2, _ = call(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2 and out1.endswith("\n")


def test_expand_qseries_sides_agree(capsys):
    code, out, _ = call(capsys, "expand", "qseries", "--n", "3", "--x0", "2", "--K", "10", "--M", "12")
    assert code == 0 and json.loads(out)["equal"] is True


def test_padic_output_shape(capsys):
    code, out, _ = call(capsys, "padic", "--p", "5", "--q0", "6", "--N", "4", "--M", "8",
                        "--integrand", "bracket_power:n=1")
    assert code == 0
    obj = json.loads(out)
    assert {"p", "M", "N", "residue", "valuation_vs_target"} <= obj.keys()
    assert isinstance(obj["residue"], str)
    assert obj["valuation_vs_target"] >= 4


def test_table_stirling_csv(capsys):
    code, out, _ = call(capsys, "table", "stirling1", "--max-n", "4", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,k,value"
    assert "4,1,-6" in lines and "4,2,11" in lines
    assert len(lines) == 1 + 15


def test_table_empty_range(capsys):
    code, out, _ = call(capsys, "table", "stirling2", "--min-n", "5", "--max-n", "3", "--format", "csv")
    assert code == 0 and out == "n,k,value\n"


def test_table_changhee_limits(capsys):
    code, out, _ = call(capsys, "table", "changhee-limits", "--max-n", "2")
    vals = [row["value"] for row in json.loads(out)]
    assert vals == [{"n": "1", "d": "1"}, {"n": "-1", "d": "2"}, {"n": "1", "d": "2"}]


def test_out_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, out, _ = call(capsys, "table", "stirling1", "--max-n", "3", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().splitlines()[0] == "n,k,value"


def test_verify_small_all_passes(capsys):
    code, out, _ = call(capsys, "verify", "all", *SMALL_VERIFY)
    report = json.loads(out)
    assert code == 0 and report["ok"] is True
    assert {r["identity"] for r in report["results"]} == set(suite.IDENTITIES)


@pytest.mark.slow
def test_verify_all_default_ranges(capsys):
    code, out, _ = call(capsys, "verify", "all")
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_csv(capsys):
    code, out, _ = call(capsys, "verify", "theorem4", "--max-n", "3", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "identity,params,zero" and len(lines) == 5
    assert all(line.endswith(",true") for line in lines[1:])


@pytest.mark.parametrize("argv", [
    ["verify", "theorem4", "--max-n", "-1"],
    ["verify", "all", "--d", "2"],
    ["verify", "all", "--p", "9"],
    ["verify", "all", "--max-r", "0"],
    ["verify", "bogus"],
    ["compute", "euler-rebased", "--n", "2", "--d", "4"],
    ["compute", "euler-rebased", "--n", "2", "--d", "3", "--a", "3"],
    ["compute", "changhee", "--n", "-2"],
    ["compute", "changhee"],
    ["padic", "--p", "4", "--q0", "5", "--N", "2", "--M", "3", "--integrand", "constant"],
    ["padic", "--p", "5", "--q0", "7", "--N", "2", "--M", "3", "--integrand", "constant"],
    ["padic", "--p", "5", "--q0", "6", "--N", "2", "--M", "0", "--integrand", "constant"],
    ["padic", "--p", "5", "--q0", "6", "--N", "2", "--M", "3", "--integrand", "wobble"],
    ["padic", "--p", "5", "--q0", "6", "--N", "2", "--M", "3", "--integrand", "q_power:l=1", "--r", "2"],
    ["expand", "qseries", "--n", "2", "--K", "10", "--M", "5"],
    ["table", "stirling1"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2
    assert out == "" and err


def test_computation_errors_exit_1(capsys):
    code, out, err = call(capsys, "padic", "--p", "3", "--q0", "4", "--N", "2", "--M", "3",
                          "--integrand", "bracket_binom:n=3")
    assert code == 1 and "n < p" in err
    code, out, err = call(capsys, "padic", "--p", "7", "--q0", "8", "--N", "6", "--M", "3",
                          "--integrand", "bracket_power:n=1", "--r", "2")
    assert code == 1 and "budget" in err


@pytest.mark.parametrize("kind,n,k", [("first", 4, 2), ("first", 3, 1), ("first", 6, 3), ("second", 5, 2)])
def test_stirling_sign_flip_fails_verification(monkeypatch, capsys, kind, n, k):
    table = combinat.stirling_table(kind, 14)
    rows = [list(row) for row in table.entries]
    rows[n][k] = -rows[n][k]
    bad = StirlingTable(kind, table.max_n, tuple(tuple(r) for r in rows))
    monkeypatch.setitem(combinat._TABLES, kind, bad)
    qchanghee.clear_caches()
    try:
        code, out, _ = call(capsys, "verify", "all", *SMALL_VERIFY)
        assert code == 1
        assert json.loads(out)["ok"] is False
    finally:
        monkeypatch.undo()
        qchanghee.clear_caches()
    code, _, _ = call(capsys, "verify", "stirling", *SMALL_VERIFY)
    assert code == 0


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qchanghee", "table", "stirling1", "--max-n", "2",
                          "--format", "csv"], capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,-1\n2,2,1\n"
    res = subprocess.run([sys.executable, "-m", "qchanghee", "padic"], capture_output=True, text=True)
    assert res.returncode == 2
