from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fibmaxmin.errors import DomainError, IndexRangeError
from fibmaxmin.numeric import (PHI, Surd, binet_exact, cassini, dist_nearest_int,
                               double_index_identity, fib, lucas, nearest_integer, parse_surd,
                               phi_power, surd_floor, surd_sign, FibCache)

fractions = st.fractions(max_denominator=10 ** 6).filter(lambda f: abs(f) < 10 ** 6)
surds = st.builds(Surd, fractions, fractions)


def decimal_value(s: Surd) -> Decimal:
    # test oracle: 100-digit decimal evaluation
    with localcontext() as ctx:
        ctx.prec = 110
        a = Decimal(s.a.numerator) / Decimal(s.a.denominator)
        b = Decimal(s.b.numerator) / Decimal(s.b.denominator)
        return a + b * Decimal(5).sqrt()


@pytest.mark.parametrize("n, expected", [(7, 13), (0, 0), (-1, 1), (1, 1), (2, 1), (12, 144)])
def test_fib(n, expected):
    assert fib(n) == expected


def test_fib_out_of_range():
    with pytest.raises(IndexRangeError):
        fib(-2)
    with pytest.raises(IndexRangeError):
        fib(10 ** 6)


def test_small_cache_limits():
    cache = FibCache(10)
    assert cache.fib(10) == 55
    assert cache.lucas(10) == 123
    with pytest.raises(IndexRangeError):
        cache.fib(11)


def test_recurrence_over_cache():
    for n in range(0, 256):
        assert fib(n + 1) == fib(n) + fib(n - 1)
    for n in range(1, 256):
        assert lucas(n + 1) == lucas(n) + lucas(n - 1)


@pytest.mark.parametrize("a, b, expected", [
    (0, 0, 0),
    (Fraction(-5, 10), Fraction(3, 10), 1),
    (2, -1, -1),
    (-3, 1, -1),   # sqrt5 < 3
    (3, -1, 1),
    (0, -1, -1),
])
def test_surd_sign(a, b, expected):
    assert surd_sign(Surd(a, b)) == expected


@given(surds)
def test_surd_sign_matches_decimal(s):
    v = decimal_value(s)
    assert surd_sign(s) == (v > 0) - (v < 0)


@given(surds, surds)
def test_surd_order_matches_decimal(s, t):
    assert (s < t) == (decimal_value(s) < decimal_value(t))


@given(surds)
def test_surd_floor(s):
    g = surd_floor(s)
    assert g <= s < g + 1


@given(surds, surds.filter(lambda t: t != 0))
def test_surd_field_ops(s, t):
    assert (s / t) * t == s
    assert s - t + t == s


def test_dist_examples():
    assert dist_nearest_int(Fraction(24, 11)) == Fraction(2, 11)
    assert dist_nearest_int(Fraction(1, 2)) == Fraction(1, 2)
    v = dist_nearest_int(3 * Surd(Fraction(1, 2), Fraction(-1, 10)))
    assert v == Surd(Fraction(-1, 2), Fraction(3, 10))
    assert Decimal("0.17082") < v.to_decimal(10) < Decimal("0.17083")


@given(fractions, st.integers(-1000, 1000))
def test_dist_invariances_rational(x, m):
    d = dist_nearest_int(x)
    assert 0 <= d <= Fraction(1, 2)
    assert dist_nearest_int(x + m) == d
    assert dist_nearest_int(-x) == d


@given(surds, st.integers(-1000, 1000))
def test_dist_invariances_surd(s, m):
    d = dist_nearest_int(s)
    assert 0 <= d <= Fraction(1, 2)
    assert dist_nearest_int(s + m) == d
    assert dist_nearest_int(-s) == d


def test_nearest_integer_ties_to_even():
    assert nearest_integer(Fraction(5, 2)) == 2
    assert nearest_integer(Fraction(7, 2)) == 4
    assert nearest_integer(Fraction(-1, 2)) == 0
    assert nearest_integer(PHI) == 2


@pytest.mark.parametrize("n, expected", [(0, 0), (7, 13), (12, 144)])
def test_binet(n, expected):
    assert binet_exact(n) == expected


def test_binet_all_cached():
    assert all(binet_exact(n) == fib(n) for n in range(0, 257))


@pytest.mark.parametrize("n, expected", [(2, 1), (7, -1), (10, 1)])
def test_cassini_examples(n, expected):
    assert cassini(n) == expected


def test_cassini_range():
    assert all(cassini(n) == (-1) ** n for n in range(1, 201))


@pytest.mark.parametrize("t", [1, 3, 10])
def test_double_index_examples(t):
    assert double_index_identity(t)


def test_double_index_range():
    assert all(double_index_identity(t) for t in range(1, 101))


def test_phi_power():
    assert phi_power(0) == 1
    assert phi_power(1) == Surd(Fraction(1, 2), Fraction(1, 2))
    assert phi_power(2) == Surd(Fraction(3, 2), Fraction(1, 2))
    for n in range(1, 200):
        assert phi_power(n + 1) == phi_power(n) + phi_power(n - 1)
    assert phi_power(40) == PHI ** 40
    with pytest.raises(DomainError):
        phi_power(-1)


@given(surds)
def test_surd_text_round_trip(s):
    assert parse_surd(str(s)) == s
