"""Executable checks for the mixed-family identities.

Each ``verify_*`` function builds the left-hand side from the mixed-family
generator and the right-hand side from auxiliary families (poly-Bernoulli,
Barnes, Stirling numbers, factorial bases, ...), then compares them exactly.
Nothing is compared with a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Any, Union

from . import families as fam
from .errors import CapExhaustedError, DomainError, InvalidParamsError
from .exact_series import mul
from .families import MixedFamilyKey
from .umbral_core import (
    Poly,
    connection_coefficients,
    expand_in_basis,
    functional_apply,
    shift,
)

Rational = Union[int, Fraction]

THEOREM_IDS = (
    "T1a", "T1b", "T1c", "T1d", "T1e",
    "T2", "T3", "T4", "T4remark", "T5", "T6", "T7", "T8", "T9",
)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one exact comparison.

    ``first_diff`` is ``(index, lhs_coeff, rhs_coeff)`` for the lowest power
    of ``x`` where the sides disagree (index 0 for scalars). ``extras``
    carries auxiliary values such as point evaluations or a second-route
    coefficient row.
    """

    theorem_id: str
    params: dict
    lhs: Any
    rhs: Any
    equal: bool
    first_diff: tuple | None = None
    extras: dict = field(default_factory=dict)

    def sort_key(self):
        return (THEOREM_IDS.index(self.theorem_id), tuple(_sortable(v) for v in self.params.values()))


def _sortable(v):
    if isinstance(v, (tuple, list)):
        return tuple(Fraction(x) for x in v)
    if v is None:
        return ()
    return (Fraction(v),)


def make_report(theorem_id: str, params: dict, lhs, rhs, extras: dict | None = None) -> IdentityReport:
    if theorem_id not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    if isinstance(lhs, Poly) or isinstance(rhs, Poly):
        lc = lhs.coeffs if isinstance(lhs, Poly) else Poly([lhs]).coeffs
        rc = rhs.coeffs if isinstance(rhs, Poly) else Poly([rhs]).coeffs
        diff = None
        for i in range(max(len(lc), len(rc))):
            a = lc[i] if i < len(lc) else Fraction(0)
            b = rc[i] if i < len(rc) else Fraction(0)
            if a != b:
                diff = (i, a, b)
                break
    else:
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        diff = None if lhs == rhs else (0, lhs, rhs)
    return IdentityReport(theorem_id, params, lhs, rhs, diff is None, diff, extras or {})


def key_params(n: int, key: MixedFamilyKey, **extra) -> dict:
    p = {"n": n, "r": key.r, "k": key.k, "a": key.a}
    p.update(extra)
    return p


# --------------------------------------------------------------------------
# explicit expressions

def explicit_rhs(form: str, n: int, key: MixedFamilyKey) -> Poly:
    """One of the five explicit expressions for the degree-``n`` mixed polynomial.

    ``form`` is one of ``"a"`` .. ``"e"``.
    """
    k, params = key.k, key.params
    x = Poly.x()
    if form == "a":
        return sum(
            (fam.poly_bernoulli_poly(l, k) * (comb(n, l) * fam.barnes_bernoulli_number(n - l, params))
             for l in range(n + 1)),
            Poly(),
        )
    if form == "b":
        return sum(
            (fam.barnes_bernoulli_poly(l, params) * (comb(n, l) * fam.poly_bernoulli_number(n - l, k))
             for l in range(n + 1)),
            Poly(),
        )
    if form == "c":
        # m runs over the full range 0..n; forward differences of order m > l
        # vanish on (x - j)^l, so only m <= l actually contributes.
        total = Poly()
        for l in range(n + 1):
            bl = comb(n, l) * fam.barnes_bernoulli_number(n - l, params)
            if not bl:
                continue
            for m in range(n + 1):
                wm = bl / Fraction(m + 1) ** k
                for j in range(m + 1):
                    total = total + (x - j) ** l * ((-1) ** j * comb(m, j) * wm)
        return total
    if form == "d":
        coeffs = []
        for l in range(n + 1):
            c = Fraction(0)
            for j in range(l, n + 1):
                bj = fam.barnes_bernoulli_number(j - l, params)
                if not bj:
                    continue
                for m in range(n - j + 1):
                    s2 = fam.stirling2(n - j, m)
                    if s2:
                        c += ((-1) ** (n - m - j) * comb(n, j) * comb(j, l) * factorial(m) * s2
                              * bj / Fraction(m + 1) ** k)
            coeffs.append(c)
        return Poly(coeffs)
    if form == "e":
        return Poly(comb(n, j) * fam.mixed_number(n - j, key) for j in range(n + 1))
    raise ValueError(f"unknown explicit form {form!r}")


def verify_explicit(n: int, key: MixedFamilyKey) -> list:
    lhs = fam.mixed_poly(n, key)
    return [
        make_report(f"T1{form}", key_params(n, key), lhs, explicit_rhs(form, n, key))
        for form in "abcde"
    ]


# --------------------------------------------------------------------------
# Sheffer identity

def verify_sheffer(n: int, key: MixedFamilyKey, x0: Rational, y0: Rational) -> IdentityReport:
    """``S_n(x + y0) = sum_j C(n, j) S_j(x) y0^(n-j)`` as polynomials in ``x``."""
    y0, x0 = Fraction(y0), Fraction(x0)
    lhs = shift(fam.mixed_poly(n, key), y0)
    rhs = sum((fam.mixed_poly(j, key) * (comb(n, j) * y0 ** (n - j)) for j in range(n + 1)), Poly())
    extras = {"lhs_at_x0": lhs(x0), "rhs_at_x0": rhs(x0)}
    return make_report("T2", key_params(n, key, y=y0, x0=x0), lhs, rhs, extras)


# --------------------------------------------------------------------------
# recurrences

def recurrence_rhs(n: int, key: MixedFamilyKey, bracket_sign: int = 1) -> Poly:
    """Right-hand side of the ``S_{n+1}`` recurrence.

    ``bracket_sign=-1`` reverses the order of the two extended-family terms
    (used only to check that the comparison is sensitive to it).
    """
    x = Poly.x()
    B = fam.bernoulli_numbers(n + 1)
    out = x * fam.mixed_poly(n, key)
    for l in range(n + 1):
        w = sum((comb(n + 1, l) * (-a) ** (n + 1 - l) * B[n + 1 - l] for a in key.a), Fraction(0))
        if w:
            out = out - fam.mixed_poly(l, key) * (w / (n + 1))
    bracket = fam.mixed_poly(n + 1, key.extended(0)) - fam.mixed_poly(n + 1, key.extended(-1))
    return out - bracket * Fraction(bracket_sign, n + 1)


def more_relation_rhs(n: int, key: MixedFamilyKey) -> Poly:
    """Right-hand side of the second ``S_n`` recurrence (``n >= 1``)."""
    if n < 1:
        raise DomainError("the relation divides by n and needs n >= 1")
    x = Poly.x()
    B = fam.bernoulli_numbers(n)
    out = x * fam.mixed_poly(n - 1, key)
    for m in range(1, n + 1):
        w = Fraction((-1) ** (m - 1) * comb(n - 1, m - 1)) * B[m] / m
        w *= sum((a**m for a in key.a), Fraction(0))
        if w:
            out = out + fam.mixed_poly(n - m, key) * w
    out = out + fam.mixed_poly(n, key.extended(-1)) / n
    out = out - fam.mixed_poly(n, key.extended(0)) / n
    return out


def remark_rhs(n: int, key: MixedFamilyKey) -> Poly:
    """The second recurrence re-indexed to express ``S_{n+1}``."""
    x = Poly.x()
    B = fam.bernoulli_numbers(n + 1)
    out = x * fam.mixed_poly(n, key)
    for l in range(1, n + 2):
        w = Fraction((-1) ** (l - 1) * comb(n, l - 1)) * B[l] / l
        w *= sum((a**l for a in key.a), Fraction(0))
        if w:
            out = out + fam.mixed_poly(n + 1 - l, key) * w
    out = out + fam.mixed_poly(n + 1, key.extended(-1)) / (n + 1)
    out = out - fam.mixed_poly(n + 1, key.extended(0)) / (n + 1)
    return out


def verify_recurrence(n: int, key: MixedFamilyKey) -> IdentityReport:
    return make_report("T3", key_params(n, key), fam.mixed_poly(n + 1, key), recurrence_rhs(n, key))


def verify_more_relation(n: int, key: MixedFamilyKey) -> tuple:
    """The second recurrence at ``n`` and its agreement with the first at ``n - 1``."""
    if n < 1:
        raise DomainError("the relation divides by n and needs n >= 1")
    main = make_report("T4", key_params(n, key), fam.mixed_poly(n, key), more_relation_rhs(n, key))
    remark = make_report("T4remark", key_params(n, key), remark_rhs(n - 1, key), recurrence_rhs(n - 1, key))
    return main, remark


# --------------------------------------------------------------------------
# numbers

def number_relation_pairing(n: int, key: MixedFamilyKey, cap: int) -> Fraction:
    """``<t^r / prod(exp(a_j t) - 1) * Li_k(1 - exp(-t)) | x^(n+1)>`` at the given cap."""
    series = mul(fam.barnes_generating_series(key.params, cap), fam.polylog_series(key.k, cap))
    return functional_apply(series, Poly.monomial(n + 1))


def verify_number_relation(n: int, key: MixedFamilyKey, cap: int | None = None) -> IdentityReport:
    """Scalar relation between mixed numbers and poly-Bernoulli/Barnes numbers.

    The left side reads the mixed numbers off the generating series at
    ``cap`` (default ``n + 2``); the same cap is used for an independent
    pairing against ``x^(n+1)``, so too small a cap raises
    :class:`CapExhaustedError` instead of giving a wrong answer.
    """
    if cap is None:
        cap = n + 2
    if cap < n + 1:
        raise CapExhaustedError(f"pairing against x^{n + 1} needs cap >= {n + 1}, have {cap}")
    gen = fam.mixed_generating_series(key, cap)
    numbers = [gen[m] * factorial(m) for m in range(n + 1)]
    lhs = sum((comb(n + 1, m) * (-1) ** (n - m) * numbers[m] for m in range(n + 1)), Fraction(0))
    rhs = Fraction(0)
    for l in range(n + 1):
        bl = fam.barnes_bernoulli_number(n - l, key.params)
        if not bl:
            continue
        inner = sum(
            ((-1) ** (l - m) * comb(l, m) * fam.poly_bernoulli_number(m, key.k - 1) for m in range(l + 1)),
            Fraction(0),
        )
        rhs += comb(n + 1, l + 1) * inner * bl
    extras = {"pairing": number_relation_pairing(n, key, cap), "cap": cap}
    return make_report("T5", key_params(n, key), lhs, rhs, extras)


# --------------------------------------------------------------------------
# basis expansions

def falling_coefficients(n: int, key: MixedFamilyKey) -> list:
    return [
        sum((fam.stirling2(l, m) * comb(n, l) * fam.mixed_number(n - l, key) for l in range(m, n + 1)), Fraction(0))
        for m in range(n + 1)
    ]


def rising_coefficients(n: int, key: MixedFamilyKey) -> list:
    out = []
    for m in range(n + 1):
        c = Fraction(0)
        for l in range(m, n + 1):
            s2 = fam.stirling2(l, m)
            if s2:
                c += s2 * comb(n, l) * fam.mixed_poly(n - l, key)(-m)
        out.append(c)
    return out


def frobenius_coefficients(n: int, key: MixedFamilyKey, s: int, lam: Rational) -> list:
    lam = Fraction(lam)
    if lam == 1:
        raise InvalidParamsError("lambda must differ from 1")
    scale = 1 / (1 - lam) ** s
    out = []
    for m in range(n + 1):
        p = fam.mixed_poly(n - m, key)
        inner = sum((comb(s, j) * (-lam) ** (s - j) * p(j) for j in range(s + 1)), Fraction(0))
        out.append(comb(n, m) * scale * inner)
    return out


def higher_bernoulli_coefficients(n: int, key: MixedFamilyKey, s: int) -> list:
    out = []
    for m in range(n + 1):
        inner = Fraction(0)
        for l in range(n - m + 1):
            inner += (Fraction(comb(n - m, l), comb(l + s, l)) * fam.stirling2(l + s, s)
                      * fam.mixed_number(n - m - l, key))
        out.append(comb(n, m) * inner)
    return out


def _connection_row(n: int, key: MixedFamilyKey, target) -> list:
    return connection_coefficients(fam.mixed_g(key, n + fam.GUARD), target, n)[n]


def verify_falling(n: int, key: MixedFamilyKey) -> IdentityReport:
    coeffs = falling_coefficients(n, key)
    rhs = expand_in_basis(coeffs, [fam.falling_factorial(m) for m in range(n + 1)])
    row = _connection_row(n, key, fam.falling_target(n + fam.GUARD))
    extras = {"coefficients": coeffs, "connection_row": row}
    return make_report("T6", key_params(n, key), fam.mixed_poly(n, key), rhs, extras)


def verify_rising(n: int, key: MixedFamilyKey) -> IdentityReport:
    coeffs = rising_coefficients(n, key)
    rhs = expand_in_basis(coeffs, [fam.rising_factorial(m) for m in range(n + 1)])
    row = _connection_row(n, key, fam.rising_target(n + fam.GUARD))
    extras = {"coefficients": coeffs, "connection_row": row}
    return make_report("T7", key_params(n, key), fam.mixed_poly(n, key), rhs, extras)


def verify_frobenius(n: int, key: MixedFamilyKey, s: int, lam: Rational) -> IdentityReport:
    lam = Fraction(lam)
    coeffs = frobenius_coefficients(n, key, s, lam)
    rhs = expand_in_basis(coeffs, [fam.frobenius_euler_poly(m, s, lam) for m in range(n + 1)])
    row = _connection_row(n, key, fam.frobenius_target(s, lam, n + fam.GUARD))
    extras = {"coefficients": coeffs, "connection_row": row}
    return make_report("T8", key_params(n, key, s=s, **{"lambda": lam}), fam.mixed_poly(n, key), rhs, extras)


def verify_higher_bernoulli(n: int, key: MixedFamilyKey, s: int) -> IdentityReport:
    coeffs = higher_bernoulli_coefficients(n, key, s)
    rhs = expand_in_basis(coeffs, [fam.higher_bernoulli_poly(m, s) for m in range(n + 1)])
    row = _connection_row(n, key, fam.higher_bernoulli_target(s, n + fam.GUARD))
    extras = {"coefficients": coeffs, "connection_row": row}
    return make_report("T9", key_params(n, key, s=s), fam.mixed_poly(n, key), rhs, extras)
