"""Command-line front end: exit codes, output schema, round-trips."""

import json

import pytest

from pcflab.cli import main
from pcflab.pcf import Pcf, dual


def run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def test_eval_headline_trio(capsys):
    rc, out, _ = run(capsys, "eval", "[1;2]")
    assert rc == 0
    assert "verdict: Converges" in out
    assert "value: w" in out
    assert "1.4142135623" in out

    rc, out, _ = run(capsys, "eval", "[1;-1,2]")
    assert rc == 1
    assert "Diverges" in out

    rc, out, _ = run(capsys, "eval", "[1;-2,2]")
    assert rc == 0
    assert "verdict: Converges" in out

    rc, out, _ = run(capsys, "eval", "[;2,-1/2,1]")
    assert rc == 1
    assert "Diverges(Ineq)" in out
    assert "pariah" in out


def test_eval_parse_error(capsys):
    rc, _, err = run(capsys, "eval", "[1;2")
    assert rc == 2
    assert err


def test_eval_big_solution_rate(capsys):
    rc, out, _ = run(capsys, "eval", "[442+312*w;-298532+211094*w,884+624*w]")
    assert rc == 0
    assert "sqrt(2+w)" in out
    assert "1.8477590650" in out
    assert "~550.3" in out


def test_dual_swaps_root(capsys):
    rc, out, _ = run(capsys, "dual", "[1;2]")
    assert rc == 0
    first = out.splitlines()[0]
    assert first.startswith("dual: ")
    dual_str = first.split("dual: ", 1)[1]
    assert Pcf.parse(dual_str) == dual(Pcf.parse("[1;2]"))
    assert "value: -w" in out
    assert "-1.4142135623" in out


def test_variety_check_exit_codes(capsys):
    base = ["variety", "check", "--type", "0,3", "--target", "1,0,-2"]
    rc, out, _ = run(capsys, *base, "--point", "1,1,0", "--point", "3,-1,2")
    assert rc == 0
    assert out.count("member") == 2

    rc, out, _ = run(capsys, *base, "--point", "1,1,1")
    assert rc == 1

    rc, _, err = run(capsys, "variety", "check", "--type", "bad", "--target", "1,0,-2", "--point", "1,1,0")
    assert rc == 2
    assert err


def test_fp_project_non_member_is_math_error(capsys):
    base = ["fp", "project", "--type", "0,3", "--target", "1,0,-2"]
    rc, out, _ = run(capsys, *base, "--point", "1,1,0")
    assert rc == 0
    assert "(1, 1)" in out

    rc, out, err = run(capsys, *base, "--point", "1,1,1")
    assert rc == 1
    assert "math error" in err


def test_search_table_codes(capsys):
    rc, out, _ = run(capsys, "search", "table", "z22_03")
    assert rc == 0
    assert "16/16" in out

    rc, _, err = run(capsys, "search", "table", "nonsense")
    assert rc == 2
    assert "z22_03" in err


def test_search_ljunggren(capsys):
    rc, out, _ = run(capsys, "search", "ljunggren", "--bound", "1000")
    assert rc == 0
    assert "(239, 13)" in out
    assert "8 solutions with |y| <= 1000" in out


def test_search_ecurve(capsys):
    rc, out, _ = run(capsys, "search", "ecurve", "--pi", "2+w", "--kmax", "20")
    assert rc == 0
    assert "21 points" in out


def test_skolem_reports(capsys):
    rc, out, _ = run(capsys, "skolem", "rst", "--nmax", "4")
    assert rc == 0
    assert "-2080-1472*w" in out

    rc, out, _ = run(capsys, "skolem", "table")
    assert rc == 0
    assert "+-(449+317*w)" in out

    rc, out, _ = run(capsys, "skolem", "oryx", "--jmax", "30")
    assert rc == 0
    assert "PASS" in out

    rc, out, _ = run(capsys, "skolem", "l2", "--kmax", "20")
    assert rc == 0
    assert "{0, 1}" in out


def test_precision_flag_and_env(capsys, monkeypatch):
    rc, out, _ = run(capsys, "--precision", "10", "eval", "[1;2]")
    assert rc == 0
    assert "decimal: 1.4142135624" in out

    monkeypatch.setenv("PCFLAB_PRECISION", "5")
    rc, out, _ = run(capsys, "eval", "[1;2]")
    assert "decimal: 1.41421" in out

    rc, out, _ = run(capsys, "--precision", "12", "eval", "[1;2]")
    assert "decimal: 1.414213562373" in out


def test_json_lines_schema_and_determinism(capsys):
    rc, out1, _ = run(capsys, "--format", "json-lines", "eval", "[1;2]")
    assert rc == 0
    rec = json.loads(out1)
    assert list(rec) == ["pcf", "residuals", "value_decimal", "verdict"]
    assert rec["verdict"] == "Converges"

    rc, out2, _ = run(capsys, "--format", "json-lines", "eval", "[1;2]")
    assert out1 == out2

    rc, out, _ = run(capsys, "--format", "json-lines", "search", "table", "z22_03")
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 16
    for line in lines:
        rec = json.loads(line)
        assert list(rec) == ["coords", "residuals", "value_decimal", "verdict"]
        assert rec["verdict"] == "match"


def test_printed_pcf_reparses(capsys):
    for s in ("[1;2]", "[442+312*w;-298532+211094*w,884+624*w]", "[;2,-1/2,1]"):
        _, out, _ = run(capsys, "eval", s)
        printed = out.splitlines()[0].split("pcf: ", 1)[1]
        assert Pcf.parse(printed) == Pcf.parse(s)
