"""``umbral-mix`` command line: polynomial tables and identity sweeps.

Records go to stdout one per line (JSON Lines, or CSV with ``--format csv``);
diagnostics and the verification summary go to stderr.

Exit codes: 0 success, 1 an identity failed, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import families as fam
from .errors import UmbralError
from .serialize import encode_params, encode_value, format_rational, parse_rational, report_record
from .sweep import SUITES, Grid, resolve_jobs, run_suite

FAMILIES = (
    "mixed",
    "poly-bernoulli",
    "barnes",
    "frobenius-euler",
    "higher-bernoulli",
    "bernoulli-numbers",
    "stirling2",
)


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``"3"`` or ``"0..4"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad degree range {text!r}; expected N or LO..HI") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad degree range {text!r}")
    return range(lo, hi + 1)


def parse_rational_list(text: str) -> tuple:
    return tuple(parse_rational(p) for p in text.split(",") if p.strip())


def parse_int_list(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def parse_a_sets(text: str) -> tuple:
    return tuple(parse_rational_list(chunk) for chunk in text.split(";") if chunk.strip())


# --------------------------------------------------------------------------
# table

def _barnes_params(args) -> fam.BarnesParams:
    if args.a is not None:
        a = parse_rational_list(args.a)
    else:
        a = (Fraction(1),) * (1 if args.r is None else args.r)
    if args.r is not None and args.r != len(a):
        raise UsageError(f"--r {args.r} does not match {len(a)} value(s) in --a")
    return fam.BarnesParams(a)


def table_records(args):
    family = args.family
    degrees = parse_range(args.n)
    if family == "bernoulli-numbers":
        B = fam.bernoulli_numbers(degrees[-1])
        for n in degrees:
            yield family, {"n": n}, B[n]
    elif family == "stirling2":
        for l in degrees:
            yield family, {"l": l}, [fam.stirling2(l, m) for m in range(l + 1)]
    elif family == "barnes":
        p = _barnes_params(args)
        for n in degrees:
            yield family, {"n": n, "r": p.r, "a": p.a}, fam.barnes_bernoulli_poly(n, p)
    elif family == "mixed":
        p = _barnes_params(args)
        key = fam.MixedFamilyKey(p, args.k)
        for n in degrees:
            yield family, {"n": n, "r": p.r, "k": args.k, "a": p.a}, fam.mixed_poly(n, key)
    elif family == "poly-bernoulli":
        for n in degrees:
            yield family, {"n": n, "k": args.k}, fam.poly_bernoulli_poly(n, args.k)
    elif family == "frobenius-euler":
        lam = parse_rational(args.lam)
        if lam == 1:
            raise UmbralError("lambda must differ from 1")
        for n in degrees:
            yield family, {"n": n, "s": args.s, "lambda": lam}, fam.frobenius_euler_poly(n, args.s, lam)
    elif family == "higher-bernoulli":
        for n in degrees:
            yield family, {"n": n, "s": args.s}, fam.higher_bernoulli_poly(n, args.s)
    else:
        raise UsageError(f"unknown family {family!r}")


def _csv_params(params: dict) -> str:
    parts = []
    for k, v in encode_params(params).items():
        if isinstance(v, list):
            v = ",".join(v)
        parts.append(f"{k}={v}")
    return ";".join(parts)


def _csv_payload(v) -> str:
    enc = encode_value(v)
    return " ".join(enc) if isinstance(enc, list) else enc


def cmd_table(args, out) -> int:
    if args.s is not None and args.s < 0:
        raise UsageError("--s must be non-negative")
    records = list(table_records(args))
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["family", "params", "payload"])
        for family, params, payload in records:
            w.writerow([family, _csv_params(params), _csv_payload(payload)])
    else:
        for family, params, payload in records:
            rec = {"family": family, "params": encode_params(params), "payload": encode_value(payload)}
            out.write(json.dumps(rec) + "\n")
    return 0


# --------------------------------------------------------------------------
# verify

def build_grid(args) -> Grid:
    kw = {}
    if args.max_n is not None:
        kw["max_n"] = args.max_n
    if args.r_list is not None:
        kw["r_list"] = parse_int_list(args.r_list)
    if args.k_list is not None:
        kw["k_list"] = parse_int_list(args.k_list)
    if args.a_sets is not None:
        kw["a_sets"] = parse_a_sets(args.a_sets)
    if args.s_list is not None:
        kw["s_list"] = parse_int_list(args.s_list)
    if args.lambda_list is not None:
        kw["lambda_list"] = parse_rational_list(args.lambda_list)
    if args.y_list is not None:
        kw["y_list"] = parse_rational_list(args.y_list)
    grid = Grid(**kw)
    grid.keys()
    return grid


def cmd_verify(args, out, err) -> int:
    grid = build_grid(args)
    jobs = resolve_jobs(args.jobs)
    reports = run_suite(args.suite, grid, jobs)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["theorem_id", "params", "equal", "lhs", "rhs"])
        for r in reports:
            w.writerow([r.theorem_id, _csv_params(r.params), str(r.equal).lower(),
                        _csv_payload(r.lhs), _csv_payload(r.rhs)])
    else:
        for r in reports:
            out.write(json.dumps(report_record(r)) + "\n")
    failed = [r for r in reports if not r.equal]
    err.write(f"summary: {len(reports)} checks, {len(reports) - len(failed)} passed, {len(failed)} failed\n")
    for r in failed[:20]:
        i, a, b = r.first_diff
        err.write(f"FAIL {r.theorem_id} {_csv_params(r.params)} at x^{i}: "
                  f"{format_rational(a)} != {format_rational(b)}\n")
    return 1 if failed else 0


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbral-mix",
        description="Exact tables of Barnes/poly-Bernoulli mixed-type polynomials and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="emit one record per degree for a family")
    t.add_argument("--family", required=True, choices=FAMILIES)
    t.add_argument("--n", default="0..5", help="degree N or inclusive range LO..HI")
    t.add_argument("--r", type=int, help="number of Barnes parameters (must match --a)")
    t.add_argument("--k", type=int, default=1, help="polylogarithm index (any integer)")
    t.add_argument("--a", help="comma-separated Barnes parameters, e.g. 1,1/2")
    t.add_argument("--s", type=int, default=1, help="order for frobenius-euler / higher-bernoulli")
    t.add_argument("--lambda", dest="lam", default="2", help="Frobenius-Euler lambda (rational, != 1)")
    t.add_argument("--format", choices=("json", "csv"), default="json")

    v = sub.add_parser("verify", help="check the identities over a parameter grid")
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--max-n", type=int)
    v.add_argument("--r-list")
    v.add_argument("--k-list", help="use --k-list=-2,-1,0 for lists starting with a negative value")
    v.add_argument("--a-sets", help="semicolon-separated a-sets, e.g. '1;1,2;1/2,3;2,2,1'")
    v.add_argument("--s-list")
    v.add_argument("--lambda-list")
    v.add_argument("--y-list", help="shift values for the Sheffer identity")
    v.add_argument("--jobs", type=int, help="worker processes (env UMBRAL_MIX_JOBS overrides)")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "table":
            return cmd_table(args, out)
        return cmd_verify(args, out, err)
    except (UsageError, UmbralError) as exc:
        err.write(f"umbral-mix: error: {exc}\n")
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
