from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bernoulli_check.poly import UniPoly
from bernoulli_check.series import (
    Series,
    SeriesError,
    bernoulli_egf,
    bernoulli_poly_egf,
    euler_poly_egf,
    exp_minus_one_over_t,
    exp_series,
    series_arith,
)

x = UniPoly.identity("x")
F = Fraction


def test_arith_examples():
    a, b = Series([1, 1], 2), Series([1, -1], 2)
    assert series_arith(a, b, "mul") == Series([1, 0, -1], 2)
    assert series_arith(Series([1], 3), Series([1, -1], 3), "div") == Series([1, 1, 1, 1], 3)
    assert series_arith(a, b, "add") == Series([2], 2)


def test_errors():
    with pytest.raises(SeriesError):
        Series([1], 2) + Series([1], 3)
    with pytest.raises(SeriesError):
        Series([1], 2) * Series([x], 2)
    with pytest.raises(SeriesError):
        Series([1], 2) / Series([0, 1], 2)
    with pytest.raises(SeriesError):
        Series([x], 2) / Series([x, 1], 2)
    with pytest.raises(ValueError):
        Series([1, 2, 3], 1)


def test_exp_series():
    assert exp_series(1, 3).coeffs == (1, 1, F(1, 2), F(1, 6))
    assert exp_series(0, 3).coeffs == (1, 0, 0, 0)
    assert exp_series(x, 2).coeffs == (UniPoly.constant(1), x, x**2 / 2)
    assert exp_minus_one_over_t(3).coeffs == (1, F(1, 2), F(1, 6), F(1, 24))


def test_bernoulli_egf_small():
    # long division of 1 by 1 + t/2 + t^2/6 + t^3/24 + t^4/120
    s = bernoulli_egf(4)
    assert s.coeffs == (1, F(-1, 2), F(1, 12), 0, F(-1, 720))
    assert s.egf_values()[4] == F(-1, 30)
    assert s[0] == 1


def test_polynomial_egfs_small():
    b = bernoulli_poly_egf(2).egf_values()
    assert b[0] == 1 and b[1] == x - F(1, 2) and b[2] == x**2 - x + F(1, 6)
    e = euler_poly_egf(2).egf_values()
    assert e[0] == 1 and e[1] == x - F(1, 2) and e[2] == x**2 - x


def test_euler_egf_identity():
    # (e^t + 1) * EGF == 2 e^{xt}
    N = 10
    lhs = (exp_series(1, N) + Series([1], N)).lift("x") * euler_poly_egf(N)
    assert lhs == exp_series(x, N).scale(2)


small = st.builds(F, st.integers(-30, 30), st.integers(1, 12))


@settings(max_examples=60)
@given(st.integers(0, 16).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(small, min_size=n + 1, max_size=n + 1),
                        st.lists(small, min_size=n + 1, max_size=n + 1))))
def test_mul_then_div_round_trip(case):
    n, a, b = case
    if b[0] == 0:
        b[0] = F(1)
    A, B = Series(a, n), Series(b, n)
    assert (A * B) / B == A
