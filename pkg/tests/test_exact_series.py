from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbral_mix.errors import CapExhaustedError, DivisionOrderError, NotDeltaError, ZeroDivisorError
from umbral_mix.exact_series import (
    TruncatedSeries,
    add,
    compose,
    constant,
    derivative_t,
    divide,
    exp_scaled,
    monomial,
    mul,
)

from conftest import series, small_fractions


def S(*cs, cap=None):
    return TruncatedSeries(cs, cap)


def naive_convolution(a, b, cap):
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(cap + 1)]


# ---- add

def test_add_cancels():
    assert add(S(1, 1), S(1, -1)).coeffs == (2, 0)


def test_add_zero_identity():
    s = S(F(1, 3), 2, -5)
    assert add(s, constant(0, 2)) == s


def test_add_exact_rationals():
    assert add(S(0, F(1, 2)), S(0, F(1, 3))).coeffs == (0, F(5, 6))


def test_add_truncates_to_smaller_cap():
    assert add(S(1, 2, 3), S(1, 1)).cap == 1


# ---- mul

def test_mul_difference_of_squares():
    assert mul(S(1, 1, 0), S(1, -1, 0)).coeffs == (1, 0, -1)


def test_mul_identity():
    s = S(2, F(-1, 7), 3)
    assert mul(s, constant(1, 2)) == s


def test_mul_expm1_squared():
    e = exp_scaled(1, 4) - 1
    # independent route: convolve 1/i! sequences directly
    fac = [F(0)] + [F(1, factorial(i)) for i in range(1, 5)]
    expected = naive_convolution(fac, fac, 4)
    assert expected == [0, 0, 1, 1, F(7, 12)]
    assert list(mul(e, e).coeffs) == expected


# ---- divide

def test_divide_bernoulli_generating_function():
    q = divide(monomial(1, 6), exp_scaled(1, 6) - 1)
    # oracle: solve q * (e^t - 1)/t = 1 one coefficient at a time
    d = [F(1, factorial(i + 1)) for i in range(6)]
    sol = []
    for n in range(6):
        acc = F(1 if n == 0 else 0) - sum(sol[j] * d[n - j] for j in range(n))
        sol.append(acc / d[0])
    assert sol == [1, F(-1, 2), F(1, 12), 0, F(-1, 720), 0]
    assert list(q.coeffs) == sol
    assert q.cap == 5


def test_divide_by_one():
    s = S(3, F(1, 2), -1)
    assert divide(s, constant(1, 2)) == s


def test_divide_pure_order_cancellation():
    q = divide(monomial(2, 4), monomial(1, 4))
    assert q.coeffs == (0, 1, 0, 0)


def test_divide_order_error():
    with pytest.raises(DivisionOrderError):
        divide(monomial(1, 4), monomial(2, 4))


def test_divide_zero_divisor():
    with pytest.raises(ZeroDivisorError):
        divide(S(1, 2), constant(0, 1))
    with pytest.raises(ZeroDivisionError):
        divide(S(1, 2), constant(0, 1))


# ---- compose

def test_compose_identity_substitution():
    f = S(1, 2, F(1, 3), 4)
    assert compose(f, monomial(1, 3)) == f


def test_compose_binomial():
    assert compose(monomial(2, 3), S(0, 1, 1, 0)).coeffs == (0, 0, 1, 2)


def test_compose_log_of_exp():
    cap = 10
    neg_log = TruncatedSeries([0] + [F(1, m) for m in range(1, cap + 1)])
    u = 1 - exp_scaled(-1, cap)
    out = compose(neg_log, u)
    assert out.coeffs == (0, 1) + (0,) * (cap - 1)


def test_compose_rejects_constant_term():
    with pytest.raises(NotDeltaError):
        compose(S(1, 1), S(1, 1))


# ---- exp_scaled, derivative_t

def test_exp_scaled_examples():
    assert exp_scaled(0, 4).coeffs == (1, 0, 0, 0, 0)
    assert exp_scaled(1, 3).coeffs == (1, 1, F(1, 2), F(1, 6))
    assert exp_scaled(2, 3).coeffs == (1, 2, 2, F(4, 3))


def test_derivative_examples():
    assert derivative_t(monomial(2, 3)).coeffs == (0, 2, 0)
    assert derivative_t(constant(5, 3)).is_zero()
    assert derivative_t(exp_scaled(1, 4)) == exp_scaled(1, 3)
    assert derivative_t(exp_scaled(1, 4)).cap == 3


def test_derivative_cap_zero():
    with pytest.raises(CapExhaustedError):
        derivative_t(constant(1, 0))


def test_order_and_zero_to_cap():
    assert S(0, 0, 3).order() == 2
    assert S(0, 0, 0).order() is None
    assert S(0, 0, 0).is_zero()


def test_equality_over_common_range():
    assert S(1, 2, 3) == S(1, 2)
    assert S(1, 2, 3) != S(1, 3)


def test_immutable():
    s = S(1, 2)
    with pytest.raises(AttributeError):
        s.foo = 1
    with pytest.raises(TypeError):
        s.coeffs[0] = 3


# ---- properties

@settings(max_examples=60, deadline=None)
@given(series(cap=8), series(cap=8), series(cap=8))
def test_ring_axioms(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b) == mul(b, a)
    assert add(a, b) == add(b, a)
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_divide_undoes_mul(data):
    cap = data.draw(st.integers(2, 12))
    m = data.draw(st.integers(0, 3))
    a = data.draw(series(cap=cap))
    b = data.draw(series(cap=cap, order=m))
    q = divide(mul(a, b), b)
    assert q.cap == cap - m
    assert q == a


@settings(max_examples=40, deadline=None)
@given(series(cap=8), series(cap=8, order=1), series(cap=8, order=1))
def test_compose_associative(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@settings(max_examples=50, deadline=None)
@given(small_fractions, small_fractions)
def test_exp_homomorphism(a, b):
    assert mul(exp_scaled(a, 10), exp_scaled(b, 10)) == exp_scaled(a + b, 10)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_order_additive(data):
    cap = 12
    oa, ob = data.draw(st.integers(0, 6)), data.draw(st.integers(0, 6))
    a = data.draw(series(cap=cap, order=oa))
    b = data.draw(series(cap=cap, order=ob))
    assert mul(a, b).order() == oa + ob
