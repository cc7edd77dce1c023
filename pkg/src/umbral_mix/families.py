"""Generators for the polynomial and number families.

Every polynomial family here is an Appell sequence ``s_n ~ (g(t), t)``; the
functions ending in ``_g`` build the invertible series ``g`` and the
``*_poly`` functions hand it to :func:`umbral_core.appell_polynomial`.

The central object is the mixed family with generating function

    t^r / prod_j (exp(a_j t) - 1) * Li_k(1 - exp(-t)) / (1 - exp(-t)) * exp(x t)

which multiplies the Barnes multiple Bernoulli kernel by the poly-Bernoulli
kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Union

from .errors import InvalidParamsError
from .exact_series import (
    TruncatedSeries,
    compose,
    constant,
    divide,
    exp_scaled,
    monomial,
    mul,
    power,
)
from .umbral_core import AppellDescriptor, Poly, ShefferTarget, appell_polynomial

Rational = Union[int, Fraction]

# Extra series terms kept beyond the requested polynomial degree.
GUARD = 2


@dataclass(frozen=True)
class BarnesParams:
    """The Barnes parameters ``a_1, ..., a_r`` (all nonzero, ``r >= 1``)."""

    a: tuple

    def __init__(self, a: Iterable[Rational]):
        vals = tuple(Fraction(v) for v in a)
        if not vals:
            raise InvalidParamsError("at least one Barnes parameter is required (r >= 1)")
        if any(v == 0 for v in vals):
            raise InvalidParamsError("Barnes parameters must be nonzero")
        object.__setattr__(self, "a", vals)

    @property
    def r(self) -> int:
        return len(self.a)

    def extended(self, value: Rational = 1) -> "BarnesParams":
        return BarnesParams(self.a + (Fraction(value),))

    def __str__(self):
        return ",".join(str(v) for v in self.a)


@dataclass(frozen=True)
class MixedFamilyKey:
    params: BarnesParams
    k: int

    @classmethod
    def of(cls, a: Iterable[Rational], k: int) -> "MixedFamilyKey":
        return cls(BarnesParams(a), int(k))

    @property
    def r(self) -> int:
        return self.params.r

    @property
    def a(self) -> tuple:
        return self.params.a

    def extended(self, dk: int = 0) -> "MixedFamilyKey":
        """Key for ``(r + 1, k + dk)`` with parameters ``a_1, ..., a_r, 1``."""
        return MixedFamilyKey(self.params.extended(1), self.k + dk)


def _as_params(p) -> BarnesParams:
    return p if isinstance(p, BarnesParams) else BarnesParams(p)


# --------------------------------------------------------------------------
# numbers

@lru_cache(maxsize=None)
def _bernoulli_table(N: int) -> tuple:
    num = monomial(1, N + 1)
    den = exp_scaled(1, N + 1) - 1
    q = divide(num, den)
    return tuple(c * factorial(i) for i, c in enumerate(q.coeffs))


def bernoulli_numbers(N: int) -> list:
    """``[B_0, ..., B_N]`` for ``t / (exp(t) - 1)``, so ``B_1 = -1/2``."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return list(_bernoulli_table(N))


@lru_cache(maxsize=None)
def _stirling2_row(l: int) -> tuple:
    if l == 0:
        return (1,)
    prev = _stirling2_row(l - 1)
    row = [0] * (l + 1)
    for m in range(1, l + 1):
        left = prev[m - 1]
        right = prev[m] if m < len(prev) else 0
        row[m] = m * right + left
    return tuple(row)


def stirling2(l: int, m: int) -> int:
    """Stirling number of the second kind ``S2(l, m)``."""
    if l < 0 or m < 0:
        raise ValueError("Stirling arguments must be non-negative")
    if m > l:
        return 0
    return _stirling2_row(l)[m]


# --------------------------------------------------------------------------
# kernels

def one_minus_exp_neg(cap: int) -> TruncatedSeries:
    """``1 - exp(-t)``."""
    return 1 - exp_scaled(-1, cap)


def polylog_coefficients(k: int, cap: int) -> TruncatedSeries:
    """``Li_k(u) = sum_{m>=1} u^m / m^k`` as a series in ``u``."""
    cs = [Fraction(0)]
    for m in range(1, cap + 1):
        cs.append(Fraction(1, m**k) if k >= 0 else Fraction(m ** (-k)))
    return TruncatedSeries(cs, cap)


@lru_cache(maxsize=None)
def polylog_series(k: int, cap: int) -> TruncatedSeries:
    """``Li_k(1 - exp(-t))`` truncated at ``cap``; always of order 1."""
    return compose(polylog_coefficients(k, cap), one_minus_exp_neg(cap))


@lru_cache(maxsize=None)
def poly_bernoulli_g(k: int, cap: int) -> TruncatedSeries:
    """``(1 - exp(-t)) / Li_k(1 - exp(-t))``."""
    return divide(one_minus_exp_neg(cap + 1), polylog_series(k, cap + 1))


@lru_cache(maxsize=None)
def _barnes_product(params: BarnesParams, cap: int) -> TruncatedSeries:
    prod = constant(1, cap)
    for a in params.a:
        prod = mul(prod, exp_scaled(a, cap) - 1)
    return prod


@lru_cache(maxsize=None)
def barnes_g(params: BarnesParams, cap: int) -> TruncatedSeries:
    """``prod_j (exp(a_j t) - 1) / t^r``."""
    r = params.r
    return divide(_barnes_product(params, cap + r), monomial(r, cap + r))


@lru_cache(maxsize=None)
def mixed_g(key: MixedFamilyKey, cap: int) -> TruncatedSeries:
    return mul(barnes_g(key.params, cap), poly_bernoulli_g(key.k, cap))


@lru_cache(maxsize=None)
def mixed_generating_series(key: MixedFamilyKey, cap: int) -> TruncatedSeries:
    """The generating function of the mixed numbers, built as a direct quotient.

    This is ``t^r / prod(exp(a_j t) - 1) * Li_k(u) / u`` assembled without
    inverting :func:`mixed_g`, so it can serve as an independent route to
    the numbers.
    """
    poly = divide(polylog_series(key.k, cap + 1), one_minus_exp_neg(cap + 1))
    return mul(barnes_generating_series(key.params, cap), poly)


@lru_cache(maxsize=None)
def barnes_generating_series(params: BarnesParams, cap: int) -> TruncatedSeries:
    """``t^r / prod_j (exp(a_j t) - 1)``."""
    r = params.r
    return divide(monomial(r, cap + r), _barnes_product(params, cap + r))


def frobenius_euler_g(s: int, lam: Rational, cap: int) -> TruncatedSeries:
    """``((exp(t) - lambda) / (1 - lambda))^s``."""
    lam = Fraction(lam)
    if lam == 1:
        raise InvalidParamsError("lambda must differ from 1")
    if s < 0:
        raise InvalidParamsError("order s must be non-negative")
    base = (exp_scaled(1, cap) - lam) / (1 - lam)
    return power(base, s)


def higher_bernoulli_g(s: int, cap: int) -> TruncatedSeries:
    """``((exp(t) - 1) / t)^s``."""
    if s < 0:
        raise InvalidParamsError("order s must be non-negative")
    base = divide(exp_scaled(1, cap + 1) - 1, monomial(1, cap + 1))
    return power(base, s)


# --------------------------------------------------------------------------
# target bases for connection coefficients

def falling_target(cap: int) -> ShefferTarget:
    """``(x)_n ~ (1, exp(t) - 1)``."""
    return ShefferTarget(constant(1, cap), exp_scaled(1, cap) - 1, "falling factorial")


def rising_target(cap: int) -> ShefferTarget:
    """``(x)^(n) ~ (1, 1 - exp(-t))``."""
    return ShefferTarget(constant(1, cap), one_minus_exp_neg(cap), "rising factorial")


def frobenius_target(s: int, lam: Rational, cap: int) -> ShefferTarget:
    return ShefferTarget(frobenius_euler_g(s, lam, cap), monomial(1, cap), f"frobenius-euler s={s}")


def higher_bernoulli_target(s: int, cap: int) -> ShefferTarget:
    return ShefferTarget(higher_bernoulli_g(s, cap), monomial(1, cap), f"bernoulli order {s}")


# --------------------------------------------------------------------------
# polynomial families

@lru_cache(maxsize=None)
def poly_bernoulli_poly(n: int, k: int) -> Poly:
    """Poly-Bernoulli polynomial ``B_n^(k)(x)``."""
    g = poly_bernoulli_g(k, n + GUARD)
    return appell_polynomial(AppellDescriptor(g, f"poly-bernoulli k={k}"), n)


def poly_bernoulli_number(n: int, k: int) -> Fraction:
    return poly_bernoulli_poly(n, k)[0]


@lru_cache(maxsize=None)
def _barnes_poly(n: int, params: BarnesParams) -> Poly:
    g = barnes_g(params, n + GUARD)
    return appell_polynomial(AppellDescriptor(g, f"barnes a={params}"), n)


def barnes_bernoulli_poly(n: int, params) -> Poly:
    """Barnes multiple Bernoulli polynomial ``B_n(x | a_1, ..., a_r)``."""
    return _barnes_poly(n, _as_params(params))


def barnes_bernoulli_number(n: int, params) -> Fraction:
    return barnes_bernoulli_poly(n, params)[0]


@lru_cache(maxsize=None)
def mixed_poly(n: int, key: MixedFamilyKey) -> Poly:
    """Mixed-type polynomial ``S_n^(r,k)(x | a_1, ..., a_r)``."""
    g = mixed_g(key, n + GUARD)
    return appell_polynomial(AppellDescriptor(g, f"mixed r={key.r} k={key.k}"), n)


def mixed_number(n: int, key: MixedFamilyKey) -> Fraction:
    """``S_n^(r,k)(a_1, ..., a_r)``, the mixed polynomial at ``x = 0``."""
    return mixed_poly(n, key)[0]


@lru_cache(maxsize=None)
def frobenius_euler_poly(n: int, s: int, lam: Rational) -> Poly:
    """Frobenius-Euler polynomial ``H_n^(s)(x | lambda)`` of order ``s``."""
    g = frobenius_euler_g(s, lam, n + GUARD)
    return appell_polynomial(AppellDescriptor(g, f"frobenius-euler s={s}"), n)


@lru_cache(maxsize=None)
def higher_bernoulli_poly(n: int, s: int) -> Poly:
    """Bernoulli polynomial of order ``s`` (``s = 1`` gives the classical one)."""
    g = higher_bernoulli_g(s, n + GUARD)
    return appell_polynomial(AppellDescriptor(g, f"bernoulli order {s}"), n)


def bernoulli_poly(n: int) -> Poly:
    """Classical Bernoulli polynomial ``sum_j C(n, j) B_{n-j} x^j``."""
    B = bernoulli_numbers(n)
    return Poly(comb(n, j) * B[n - j] for j in range(n + 1))


def falling_factorial(m: int) -> Poly:
    """``x (x - 1) ... (x - m + 1)``."""
    p = Poly([1])
    for i in range(m):
        p = p * Poly((-i, 1))
    return p


def rising_factorial(m: int) -> Poly:
    """``x (x + 1) ... (x + m - 1)``."""
    p = Poly([1])
    for i in range(m):
        p = p * Poly((i, 1))
    return p


def clear_caches() -> None:
    """Drop every memoized kernel, table and polynomial."""
    for fn in (
        _bernoulli_table,
        _stirling2_row,
        polylog_series,
        poly_bernoulli_g,
        _barnes_product,
        barnes_g,
        mixed_g,
        mixed_generating_series,
        barnes_generating_series,
        poly_bernoulli_poly,
        _barnes_poly,
        mixed_poly,
        frobenius_euler_poly,
        higher_bernoulli_poly,
    ):
        fn.cache_clear()
