"""Lossless text encoding of rationals, polynomials and identity reports."""

from __future__ import annotations

from fractions import Fraction

from .errors import UmbralError
from .umbral_core import Poly


def format_rational(q) -> str:
    """Canonical ``"p/q"`` (or ``"p"`` when the denominator is 1)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    try:
        if "." in s or "e" in s.lower():
            raise ValueError
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise UmbralError(f"not a rational literal: {text!r}") from None


def encode_value(v):
    """JSON-ready form: rationals become strings, polynomials dense string arrays."""
    if isinstance(v, Poly):
        return [format_rational(c) for c in v.coeffs] or ["0"]
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    if isinstance(v, dict):
        return {k: encode_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    raise TypeError(f"cannot encode {type(v).__name__}")


def encode_params(params: dict) -> dict:
    out = {}
    for k, v in params.items():
        if isinstance(v, bool):
            out[k] = v
        elif isinstance(v, int):
            out[k] = v
        else:
            out[k] = encode_value(v)
    return out


def report_record(report) -> dict:
    diff = None
    if report.first_diff is not None:
        i, a, b = report.first_diff
        diff = {"index": i, "lhs": format_rational(a), "rhs": format_rational(b)}
    return {
        "theorem_id": report.theorem_id,
        "params": encode_params(report.params),
        "payload": {
            "equal": report.equal,
            "lhs": encode_value(report.lhs),
            "rhs": encode_value(report.rhs),
            "first_diff": diff,
        },
    }


def decode_rationals(values) -> list:
    return [parse_rational(v) for v in values]
