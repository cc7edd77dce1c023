"""Series acting on polynomials: pairings, operators and Appell sequences.

A series ``f(t) = sum f_k t^k`` acts on polynomials in two ways:

* as a linear functional, ``<f(t) | x^n> = n! f_n``;
* as an operator, ``f(t) p(x) = sum_k f_k p^(k)(x)``, so that ``t`` is
  ``d/dx`` and ``exp(y t)`` is the shift ``p(x) -> p(x + y)``.

Only Appell sources (delta series ``t``) are needed here; targets of the
connection-coefficient formula may carry any delta series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

from .errors import CapExhaustedError, InvalidParamsError
from .exact_series import TruncatedSeries, constant, divide, mul

Rational = Union[int, Fraction]

__all__ = [
    "Poly",
    "AppellDescriptor",
    "ShefferTarget",
    "functional_apply",
    "operator_apply",
    "shift",
    "appell_polynomial",
    "appell_from_moments",
    "connection_coefficients",
    "expand_in_basis",
]


class Poly:
    """Dense polynomial in ``x`` with ``Fraction`` coefficients, low degree first.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients
    and degree ``-1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._c = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c: Rational = 1) -> "Poly":
        return cls([0] * n + [c])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __getitem__(self, j: int) -> Fraction:
        return self._c[j] if 0 <= j < len(self._c) else Fraction(0)

    def __call__(self, x0: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x0 + c
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self._c), len(other._c))
        return Poly(self[j] + other[j] for j in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self._c)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self._c)
        other = _as_poly(other)
        if not self._c or not other._c:
            return Poly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Rational):
        return self * (Fraction(1) / Fraction(c))

    def __pow__(self, m: int):
        result = Poly([1])
        for _ in range(m):
            result = result * self
        return result

    def derivative(self, k: int = 1) -> "Poly":
        cs = self._c
        for _ in range(k):
            cs = tuple(j * c for j, c in enumerate(cs))[1:]
        return Poly(cs)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self._c)}])"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for j in range(len(self._c) - 1, -1, -1):
            c = self._c[j]
            if not c:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly([p])
    raise TypeError(f"expected a polynomial, got {type(p).__name__}")


@dataclass(frozen=True, eq=False)
class AppellDescriptor:
    """The invertible series ``g`` of an Appell sequence ``s_n ~ (g(t), t)``."""

    g: TruncatedSeries
    label: str = ""

    def __post_init__(self):
        if not self.g.coeffs[0]:
            raise InvalidParamsError(f"Appell series {self.label!r} is not invertible")


@dataclass(frozen=True, eq=False)
class ShefferTarget:
    """A target basis ``r_n ~ (h(t), l(t))`` for connection coefficients."""

    h: TruncatedSeries
    l: TruncatedSeries
    label: str = ""

    def __post_init__(self):
        if not self.h.coeffs[0]:
            raise InvalidParamsError(f"target {self.label!r}: h(0) must be nonzero")
        if self.l.coeffs[0] or self.l.cap < 1 or not self.l.coeffs[1]:
            raise InvalidParamsError(f"target {self.label!r}: l must have order exactly 1")


def functional_apply(f: TruncatedSeries, p: Poly) -> Fraction:
    """``<f(t) | p(x)>``."""
    if p.degree > f.cap:
        raise CapExhaustedError(
            f"pairing a degree-{p.degree} polynomial needs cap >= {p.degree}, have {f.cap}"
        )
    fc = f.coeffs
    return sum((c * factorial(n) * fc[n] for n, c in enumerate(p.coeffs) if c), Fraction(0))


def operator_apply(f: TruncatedSeries, p: Poly) -> Poly:
    """``f(t) p(x) = sum_k [t^k]f * p^(k)(x)``."""
    if p.degree > f.cap:
        raise CapExhaustedError(
            f"acting on a degree-{p.degree} polynomial needs cap >= {p.degree}, have {f.cap}"
        )
    pc = p.coeffs
    out = [Fraction(0)] * len(pc)
    # t^k x^n = n!/(n-k)! x^(n-k)
    for k in range(len(pc)):
        fk = f.coeffs[k]
        if not fk:
            continue
        for n in range(k, len(pc)):
            if pc[n]:
                out[n - k] += fk * pc[n] * (factorial(n) // factorial(n - k))
    return Poly(out)


def shift(p: Poly, y: Rational) -> Poly:
    """``p(x + y)`` by binomial re-expansion."""
    y = Fraction(y)
    pc = p.coeffs
    out = [Fraction(0)] * len(pc)
    for n, c in enumerate(pc):
        if not c:
            continue
        ypow = Fraction(1)
        for i in range(n, -1, -1):
            # term C(n, i) x^i y^(n-i)
            out[i] += c * comb(n, i) * ypow
            ypow *= y
    return Poly(out)


def appell_from_moments(moments: Sequence[Fraction], n: int) -> Poly:
    """``sum_j C(n, j) m_{n-j} x^j`` given ``m_0 .. m_n``."""
    if len(moments) <= n:
        raise CapExhaustedError(f"need {n + 1} moments, have {len(moments)}")
    return Poly(comb(n, j) * moments[n - j] for j in range(n + 1))


def appell_polynomial(d: AppellDescriptor, n: int) -> Poly:
    """The ``n``-th member of the Appell sequence for ``d.g``.

    Its generating function is ``exp(x t) / g(t)``, so with
    ``m_i = i! [t^i](1/g)`` the polynomial is ``sum_j C(n,j) m_{n-j} x^j``.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    if d.g.cap < n:
        raise CapExhaustedError(f"degree {n} needs cap >= {n}, have {d.g.cap}")
    inv = divide(constant(1, n), d.g.truncate(n))
    moments = [c * factorial(i) for i, c in enumerate(inv.coeffs)]
    return appell_from_moments(moments, n)


def connection_coefficients(
    source_g: TruncatedSeries, target: ShefferTarget, n: int
) -> list:
    """Matrix ``C`` with ``s_i(x) = sum_m C[i][m] r_m(x)`` for ``i = 0..n``.

    The source is Appell, ``s_i ~ (source_g, t)``, and the target is
    ``r_m ~ (h, l)``, so ``C[i][m] = <h/g * l^m | x^i> / m!``.
    """
    cap = min(source_g.cap, target.h.cap, target.l.cap)
    if cap < n:
        raise CapExhaustedError(f"rows up to {n} need cap >= {n}, have {cap}")
    ratio = divide(target.h.truncate(n), source_g.truncate(n))
    lpow = target.l.truncate(n)
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    series = ratio
    for m in range(n + 1):
        if m:
            series = mul(series, lpow)
        for i in range(m, n + 1):
            c = series.coeffs[i]
            if c:
                rows[i][m] = c * factorial(i) / factorial(m)
    return rows


def expand_in_basis(coeffs: Sequence[Rational], basis: Sequence[Poly]) -> Poly:
    """``sum_m coeffs[m] * basis[m]``."""
    total = Poly()
    for c, b in zip(coeffs, basis):
        if c:
            total = total + b * Fraction(c)
    return total
