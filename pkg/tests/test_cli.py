import csv
import io
import json
from fractions import Fraction as F
from pathlib import Path

import pytest

from umbral_mix import families as fam
from umbral_mix.cli import main
from umbral_mix.serialize import format_rational, parse_rational
from umbral_mix.errors import UmbralError

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


# ---- rational encoding

@pytest.mark.parametrize("q,text", [(F(1, 2), "1/2"), (F(-3), "-3"), (F(0), "0"), (F(-7, 30), "-7/30")])
def test_rational_round_trip(q, text):
    assert format_rational(q) == text
    assert parse_rational(text) == q


@pytest.mark.parametrize("bad", ["0.5", "1/0", "abc", "1e3", ""])
def test_rational_rejects_non_exact(bad):
    with pytest.raises(UmbralError):
        parse_rational(bad)


# ---- table

def test_table_barnes_golden():
    code, out, _ = run("table", "--family", "barnes", "--n", "0..4", "--a", "1", "--format", "json")
    assert code == 0
    assert out == (GOLDEN / "table_barnes_a1_n0-4.jsonl").read_text()


def test_table_barnes_small_range():
    code, out, _ = run("table", "--family", "barnes", "--n", "0..2", "--a", "1", "--format", "json")
    assert code == 0
    payloads = [rec["payload"] for rec in json_lines(out)]
    assert payloads == [["1"], ["-1/2", "1"], ["1/6", "-1", "1"]]


def test_table_stirling_rows():
    code, out, _ = run("table", "--family", "stirling2", "--n", "0..4")
    assert code == 0
    recs = json_lines(out)
    assert len(recs) == 5
    assert recs[-1]["payload"] == ["0", "1", "7", "6", "1"]


def test_table_mixed_constant():
    code, out, _ = run("table", "--family", "mixed", "--n", "0", "--r", "2", "--k", "1", "--a", "1,2")
    assert code == 0
    (rec,) = json_lines(out)
    assert rec == {"family": "mixed", "params": {"n": 0, "r": 2, "k": 1, "a": ["1", "2"]}, "payload": ["1/2"]}


@pytest.mark.parametrize("family,extra", [
    ("mixed", ["--k", "-2", "--a", "1/2,3"]),
    ("poly-bernoulli", ["--k", "-1"]),
    ("barnes", ["--a", "2,2,1"]),
    ("frobenius-euler", ["--s", "2", "--lambda", "1/3"]),
    ("higher-bernoulli", ["--s", "3"]),
    ("bernoulli-numbers", []),
    ("stirling2", []),
])
def test_csv_and_json_agree(family, extra):
    code_j, out_j, _ = run("table", "--family", family, "--n", "0..6", *extra)
    code_c, out_c, _ = run("table", "--family", family, "--n", "0..6", "--format", "csv", *extra)
    assert code_j == code_c == 0
    recs = json_lines(out_j)
    rows = list(csv.DictReader(io.StringIO(out_c)))
    assert len(recs) == len(rows) == 7
    for rec, row in zip(recs, rows):
        payload = rec["payload"] if isinstance(rec["payload"], list) else [rec["payload"]]
        assert [parse_rational(v) for v in payload] == [parse_rational(v) for v in row["payload"].split()]


def test_table_payload_matches_library():
    code, out, _ = run("table", "--family", "mixed", "--n", "3..5", "--k", "-1", "--a", "1,2")
    key = fam.MixedFamilyKey.of([1, 2], -1)
    for rec in json_lines(out):
        n = rec["params"]["n"]
        assert [parse_rational(c) for c in rec["payload"]] == list(fam.mixed_poly(n, key).coeffs)


@pytest.mark.parametrize("argv,needle", [
    (["table", "--family", "barnes", "--a", "1,0"], "nonzero"),
    (["table", "--family", "frobenius-euler", "--lambda", "1"], "lambda must differ from 1"),
    (["table", "--family", "mixed", "--r", "0"], "r >= 1"),
    (["table", "--family", "barnes", "--a", "1/x"], "rational"),
    (["table", "--family", "barnes", "--a", "1,2", "--r", "3"], "does not match"),
    (["table", "--family", "barnes", "--n", "4..2"], "range"),
])
def test_table_invalid_params_exit_2(argv, needle):
    code, out, err = run(*argv)
    assert code == 2
    assert out == ""
    assert needle in err


def test_unknown_family_is_usage_error(capsys):
    code, _, _ = run("table", "--family", "nope")
    assert code == 2


# ---- verify

def test_verify_t5_degree_zero():
    code, out, err = run("verify", "--suite", "t5", "--max-n", "0")
    assert code == 0
    recs = json_lines(out)
    assert len(recs) == 7 * 6  # a-vectors x k values
    assert all(r["payload"]["equal"] for r in recs)
    assert all(r["params"]["n"] == 0 for r in recs)
    assert "0 failed" in err


def test_verify_lambda_one_rejected():
    code, out, err = run("verify", "--suite", "t8", "--lambda-list", "1")
    assert code == 2
    assert "lambda must differ from 1" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--a-sets", "1,0"],
    ["verify", "--r-list", "0"],
    ["verify", "--r-list", "4"],
    ["verify", "--max-n=-1"],
    ["verify", "--k-list", "a,b"],
])
def test_verify_invalid_grid_exit_2(argv):
    code, _, err = run(*argv)
    assert code == 2
    assert "error" in err


def test_verify_failure_exit_1(monkeypatch, fresh_caches):
    real = fam.stirling2
    monkeypatch.setattr(fam, "stirling2", lambda l, m: real(l, m) + (1 if (l, m) == (3, 2) else 0))
    code, out, err = run("verify", "--suite", "t6", "--max-n", "4", "--r-list", "1", "--k-list", "1")
    assert code == 1
    assert "FAIL T6" in err
    failing = [r for r in json_lines(out) if not r["payload"]["equal"]]
    assert failing and all(r["payload"]["first_diff"] is not None for r in failing)


def test_verify_parallel_output_is_stable(monkeypatch):
    argv = ["verify", "--suite", "t3", "--max-n", "4", "--k-list=-1,2"]
    _, serial, _ = run(*argv, "--jobs", "1")
    _, parallel, _ = run(*argv, "--jobs", "3")
    assert serial == parallel
    monkeypatch.setenv("UMBRAL_MIX_JOBS", "2")
    _, env_parallel, _ = run(*argv, "--jobs", "1")
    assert env_parallel == serial


def test_verify_record_schema():
    code, out, _ = run("verify", "--suite", "t2", "--max-n", "1", "--r-list", "1", "--k-list", "1",
                       "--a-sets", "1", "--y-list", "1/2")
    assert code == 0
    recs = json_lines(out)
    assert [r["params"]["n"] for r in recs] == [0, 1]
    assert recs[1] == {
        "theorem_id": "T2",
        "params": {"n": 1, "r": 1, "k": 1, "a": ["1"], "y": "1/2", "x0": "3/2"},
        "payload": {"equal": True, "lhs": ["1/2", "1"], "rhs": ["1/2", "1"], "first_diff": None},
    }


def test_verify_golden_records():
    code, out, _ = run("verify", "--suite", "t2", "--max-n", "1", "--r-list", "1", "--k-list", "1",
                       "--a-sets", "1", "--y-list", "1/2")
    assert code == 0
    assert out == (GOLDEN / "verify_t2_a1_k1_n0-1.jsonl").read_text()
