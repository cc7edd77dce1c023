"""Truncated formal power series in ``t`` with exact rational coefficients.

A :class:`TruncatedSeries` keeps the coefficients of ``t**0 .. t**cap``.
Binary operations truncate to the smaller cap, and division or
differentiation shrink the cap further, so the retained coefficients are
always exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

from .errors import (
    CapExhaustedError,
    DivisionOrderError,
    NotDeltaError,
    ZeroDivisorError,
)

Rational = Union[int, Fraction]

__all__ = [
    "TruncatedSeries",
    "add",
    "sub",
    "mul",
    "divide",
    "compose",
    "power",
    "exp_scaled",
    "derivative_t",
    "monomial",
    "constant",
    "from_egf",
    "to_egf",
]


class TruncatedSeries:
    """A power series known exactly up to ``t**cap``.

    ``coeffs[i]`` is the coefficient of ``t**i``; there are always
    ``cap + 1`` of them. Instances are immutable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational], cap: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if cap is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit cap")
            cap = len(cs) - 1
        if cap < 0:
            raise ValueError(f"cap must be non-negative, got {cap}")
        if len(cs) > cap + 1:
            cs = cs[: cap + 1]
        else:
            cs.extend([Fraction(0)] * (cap + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @property
    def cap(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, i: int) -> Fraction:
        if i < 0 or i > self.cap:
            raise CapExhaustedError(f"coefficient t^{i} is beyond cap {self.cap}")
        return self._coeffs[i]

    def __len__(self) -> int:
        return len(self._coeffs)

    def order(self) -> int | None:
        """Index of the first nonzero coefficient, or ``None`` if zero to cap."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return self.order() is None

    def truncate(self, cap: int) -> "TruncatedSeries":
        if cap > self.cap:
            raise CapExhaustedError(f"cannot raise cap {self.cap} to {cap}")
        return TruncatedSeries._raw(self._coeffs[: cap + 1])

    def scale(self, c: Rational) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries._raw(tuple(c * a for a in self._coeffs))

    def shift_up(self, m: int) -> "TruncatedSeries":
        """Multiply by ``t**m`` keeping the same cap."""
        cs = (Fraction(0),) * m + self._coeffs
        return TruncatedSeries._raw(cs[: self.cap + 1])

    def __add__(self, other):
        return add(self, _coerce(other, self.cap))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other, self.cap))

    def __rsub__(self, other):
        return sub(_coerce(other, self.cap), self)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return divide(self, other)

    def __rtruediv__(self, other):
        return divide(_coerce(other, self.cap), self)

    def __pow__(self, m: int):
        return power(self, m)

    def __eq__(self, other):
        # Equal on the common retained range; a truncated tail proves nothing.
        if isinstance(other, (int, Fraction)):
            other = constant(other, self.cap)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        c = min(self.cap, other.cap)
        return self._coeffs[: c + 1] == other._coeffs[: c + 1]

    __hash__ = None

    def __repr__(self):
        body = ", ".join(str(c) for c in self._coeffs)
        return f"TruncatedSeries([{body}], cap={self.cap})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"({c})*{mono}")
        head = " + ".join(terms) if terms else "0"
        return f"{head} + O(t^{self.cap + 1})"


def _coerce(x, cap: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    if isinstance(x, (int, Fraction)):
        return constant(x, cap)
    raise TypeError(f"cannot combine TruncatedSeries with {type(x).__name__}")


def constant(c: Rational, cap: int) -> TruncatedSeries:
    return TruncatedSeries([c], cap)


def monomial(m: int, cap: int, c: Rational = 1) -> TruncatedSeries:
    """``c * t**m`` at the given cap (zero to cap if ``m > cap``)."""
    cs = [Fraction(0)] * (cap + 1)
    if m <= cap:
        cs[m] = Fraction(c)
    return TruncatedSeries._raw(tuple(cs))


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    c = min(a.cap, b.cap)
    return TruncatedSeries._raw(tuple(x + y for x, y in zip(a.coeffs[: c + 1], b.coeffs)))


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    c = min(a.cap, b.cap)
    return TruncatedSeries._raw(tuple(x - y for x, y in zip(a.coeffs[: c + 1], b.coeffs)))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller cap."""
    cap = min(a.cap, b.cap)
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * (cap + 1)
    for i in range(cap + 1):
        ai = ac[i]
        if not ai:
            continue
        for j in range(cap + 1 - i):
            if bc[j]:
                out[i + j] += ai * bc[j]
    return TruncatedSeries._raw(tuple(out))


def divide(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``a / b`` as a power series.

    Both operands are first divided by ``t**order(b)``; the remaining unit
    division is solved coefficient by coefficient. The result has cap
    ``min(a.cap, b.cap) - order(b)``.
    """
    m = b.order()
    if m is None:
        raise ZeroDivisorError(f"divisor is zero to cap {b.cap}")
    oa = a.order()
    if oa is not None and oa < m:
        raise DivisionOrderError(
            f"order of dividend ({oa}) is below order of divisor ({m})"
        )
    cap = min(a.cap, b.cap) - m
    num = a.coeffs[m : m + cap + 1]
    den = b.coeffs[m : m + cap + 1]
    lead = den[0]
    q: list = []
    for i in range(cap + 1):
        acc = num[i]
        for j in range(max(0, i - len(den) + 1), i):
            d = den[i - j]
            if d:
                acc -= q[j] * d
        q.append(acc / lead)
    return TruncatedSeries._raw(tuple(q))


def power(a: TruncatedSeries, m: int) -> TruncatedSeries:
    if m < 0:
        return divide(constant(1, a.cap), power(a, -m))
    result = constant(1, a.cap)
    base = a
    while m:
        if m & 1:
            result = mul(result, base)
        m >>= 1
        if m:
            base = mul(base, base)
    return result


def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``f(g(t))`` for ``g`` with zero constant term (Horner form)."""
    if g.coeffs[0]:
        raise NotDeltaError("inner series must have zero constant term")
    cap = min(f.cap, g.cap)
    result = constant(f.coeffs[cap], cap)
    g = g.truncate(cap)
    for i in range(cap - 1, -1, -1):
        result = mul(result, g)
        result = TruncatedSeries._raw((result.coeffs[0] + f.coeffs[i],) + result.coeffs[1:])
    return result


def exp_scaled(a: Rational, cap: int) -> TruncatedSeries:
    """``exp(a*t)`` truncated at ``cap``."""
    a = Fraction(a)
    cs = []
    term = Fraction(1)
    for i in range(cap + 1):
        cs.append(term)
        term = term * a / (i + 1)
    return TruncatedSeries._raw(tuple(cs))


def derivative_t(s: TruncatedSeries) -> TruncatedSeries:
    if s.cap == 0:
        raise CapExhaustedError("cannot differentiate a series with cap 0")
    return TruncatedSeries._raw(tuple((i + 1) * c for i, c in enumerate(s.coeffs[1:])))


def from_egf(values: Sequence[Rational]) -> TruncatedSeries:
    """Series whose coefficients are ``values[i] / i!``."""
    return TruncatedSeries([Fraction(v) / factorial(i) for i, v in enumerate(values)])


def to_egf(s: TruncatedSeries) -> list:
    """Inverse of :func:`from_egf`: ``i! * [t^i] s`` for every retained ``i``."""
    return [c * factorial(i) for i, c in enumerate(s.coeffs)]
