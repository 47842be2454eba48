from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

from fibmaxmin import pwl
from fibmaxmin.errors import CaseListError, DomainError
from fibmaxmin.numeric import dist_nearest_int, fib

F = Fraction

# Lemma-1 style case lists on [0, 1/2] as (a, b, slope, intercept)
F3_CASES = [(0, F(1, 3), 1, 0), (F(1, 3), F(1, 2), -2, 1)]
F4_CASES = [(0, F(1, 4), 1, 0), (F(1, 4), F(1, 3), -3, 1),
            (F(1, 3), F(2, 5), 3, -1), (F(2, 5), F(1, 2), -2, 1)]
F5_CASES = [(0, F(1, 6), 1, 0), (F(1, 6), F(1, 5), -5, 1), (F(1, 5), F(1, 4), 5, -1),
            (F(1, 4), F(1, 3), -3, 1), (F(1, 3), F(3, 8), 3, -1), (F(3, 8), F(2, 5), -5, 2),
            (F(2, 5), F(3, 7), 5, -2), (F(3, 7), F(1, 2), -2, 1)]
F6_CASES = [(0, F(1, 9), 1, 0), (F(1, 9), F(1, 8), -8, 1), (F(1, 8), F(1, 7), 8, -1),
            (F(1, 7), F(1, 6), 1, 0), (F(1, 6), F(1, 5), -5, 1), (F(1, 5), F(3, 13), 5, -1),
            (F(3, 13), F(1, 4), -8, 2), (F(1, 4), F(3, 11), 8, -2), (F(3, 11), F(1, 3), -3, 1),
            (F(1, 3), F(4, 11), 3, -1), (F(4, 11), F(3, 8), -8, 3), (F(3, 8), F(5, 13), 8, -3),
            (F(5, 13), F(2, 5), -5, 2), (F(2, 5), F(3, 7), 5, -2), (F(3, 7), F(1, 2), -2, 1)]
# the 13x-3 / 2-8x junction is at 5/21 (the two lines meet there)
F7_CASES = [(0, F(1, 14), 1, 0), (F(1, 14), F(1, 13), -13, 1), (F(1, 13), F(1, 12), 13, -1),
            (F(1, 12), F(1, 9), 1, 0), (F(1, 9), F(1, 8), -8, 1), (F(1, 8), F(1, 7), 8, -1),
            (F(1, 7), F(2, 13), -13, 2), (F(2, 13), F(1, 6), 13, -2), (F(1, 6), F(1, 5), -5, 1),
            (F(1, 5), F(2, 9), 5, -1), (F(2, 9), F(3, 13), -13, 3), (F(3, 13), F(5, 21), 13, -3),
            (F(5, 21), F(1, 4), -8, 2), (F(1, 4), F(3, 11), 8, -2), (F(3, 11), F(3, 10), -3, 1),
            (F(3, 10), F(4, 13), -13, 4), (F(4, 13), F(5, 16), 13, -4), (F(5, 16), F(1, 3), -3, 1),
            (F(1, 3), F(4, 11), 3, -1), (F(4, 11), F(3, 8), -8, 3), (F(3, 8), F(8, 21), 8, -3),
            (F(8, 21), F(5, 13), -13, 5), (F(5, 13), F(7, 18), 13, -5), (F(7, 18), F(2, 5), -5, 2),
            (F(2, 5), F(3, 7), 5, -2), (F(3, 7), F(5, 11), -2, 1), (F(5, 11), F(6, 13), -13, 6),
            (F(6, 13), F(7, 15), 13, -6), (F(7, 15), F(1, 2), -2, 1)]


def fib_envelope(N):
    return pwl.envelope(fib(k) for k in range(1, N + 1))


def brute(coeffs, x):
    return min(dist_nearest_int(c * x) for c in coeffs)


def test_sawtooth_one():
    s = pwl.sawtooth(1)
    assert s.xs == (0, F(1, 2))
    assert s.lines == ((1, 0),)


def test_sawtooth_two():
    s = pwl.sawtooth(2)
    assert s.xs == (0, F(1, 4), F(1, 2))
    assert s.lines == ((2, 0), (-2, 1))
    assert pwl.evaluate(s, F(1, 4)) == F(1, 2)


def test_sawtooth_eight():
    s = pwl.sawtooth(8)
    assert len(s) == 8
    peaks = [v.x for v in pwl.vertices(s) if v.kind == "local-max"]
    assert peaks == [F(k, 16) for k in (1, 3, 5, 7)]
    assert all(pwl.evaluate(s, x) == F(1, 2) for x in peaks)


def test_sawtooth_zero_coefficient():
    with pytest.raises(DomainError):
        pwl.sawtooth(0)


@given(st.integers(1, 300))
def test_sawtooth_breakpoints_on_half_grid(c):
    s = pwl.sawtooth(c)
    assert all((2 * c * x).denominator == 1 for x in s.xs)


@given(st.integers(1, 200), st.fractions(0, F(1, 2), max_denominator=500),
       st.fractions(0, F(1, 2), max_denominator=500))
def test_sawtooth_restricted_matches_full(c, a, b):
    lo, hi = min(a, b), max(a, b)
    if lo == hi:
        return
    assert pwl.sawtooth(c, lo, hi) == pwl.sawtooth(c).restrict(lo, hi)


def test_min_envelope_idempotent():
    f = fib_envelope(6)
    assert pwl.min_envelope(f, f) == f


@pytest.mark.parametrize("N, cases", [(3, F3_CASES), (4, F4_CASES), (5, F5_CASES),
                                      (6, F6_CASES), (7, F7_CASES)])
def test_small_envelopes_match_case_lists(N, cases):
    assert pwl.restrict_equal(fib_envelope(N), 0, F(1, 2), cases)


def test_min_of_sawtooth_one_two_then_one_again():
    f = pwl.min_envelope(pwl.min_envelope(pwl.sawtooth(1), pwl.sawtooth(2)), pwl.sawtooth(1))
    assert pwl.restrict_equal(f, 0, F(1, 2), [(0, F(1, 3), 1, 0), (F(1, 3), F(1, 2), -2, 1)])


def test_f4_envelope_pieces():
    f = fib_envelope(4)
    assert f.xs == (0, F(1, 4), F(1, 3), F(2, 5), F(1, 2))
    assert f.lines == ((1, 0), (-3, 1), (3, -1), (-2, 1))


def test_restrict_equal_false_for_other_function():
    assert not pwl.restrict_equal(fib_envelope(4), 0, F(1, 2), F3_CASES)


def test_restrict_equal_tolerates_split_pieces():
    split = [(0, F(1, 6), 1, 0), (F(1, 6), F(1, 3), 1, 0), (F(1, 3), F(1, 2), -2, 1)]
    assert pwl.restrict_equal(fib_envelope(3), 0, F(1, 2), split)


@pytest.mark.parametrize("bad", [
    [(0, F(1, 4), 1, 0), (F(1, 3), F(1, 2), -2, 1)],       # gap
    [(0, F(1, 3), 1, 0), (F(1, 4), F(1, 2), -2, 1)],       # overlap
    [(0, F(1, 3), 1, 0), (F(1, 3), F(1, 2), -2, 2)],       # jump
    [(0, F(1, 3), 1, 0)],                                  # does not reach hi
])
def test_restrict_equal_rejects_malformed(bad):
    with pytest.raises(CaseListError):
        pwl.restrict_equal(fib_envelope(3), 0, F(1, 2), bad)


def test_global_max_examples():
    r = pwl.global_max(fib_envelope(7))
    assert (r.value, r.argmaxes) == (F(2, 11), (F(3, 11),))
    r = pwl.global_max(pwl.sawtooth(1))
    assert (r.value, r.argmaxes) == (F(1, 2), (F(1, 2),))
    r = pwl.global_max(fib_envelope(18))
    assert (r.value, r.argmaxes) == (F(34, 199), (F(55, 199),))


def test_global_max_reports_ties():
    f = pwl.sawtooth(3)
    r = pwl.global_max(f)
    assert r.value == F(1, 2)
    assert r.argmaxes == (F(1, 6), F(1, 2))


def test_zeros():
    assert pwl.zeros(pwl.sawtooth(2)) == [0, F(1, 2)]
    assert pwl.zeros(pwl.sawtooth(3)) == [0, F(1, 3)]
    z = pwl.zeros(fib_envelope(7))
    grid = sorted({F(j, fib(k)) for k in range(1, 8) for j in range(fib(k) + 1)
                   if F(j, fib(k)) <= F(1, 2)})
    assert z == grid
    assert {F(1, 13), F(1, 8), F(2, 13), F(1, 5)} <= set(z)


def test_eval_examples():
    assert pwl.evaluate(fib_envelope(7), F(3, 11)) == F(2, 11)
    assert pwl.evaluate(fib_envelope(5), F(3, 8)) == F(1, 8)
    f = fib_envelope(6)
    assert pwl.evaluate(f, 0) == f.values[0]


def test_eval_folds_periodically():
    f = fib_envelope(7)
    assert f(F(8, 11)) == F(2, 11)
    assert f(F(-3, 11)) == F(2, 11)
    assert f(F(47, 11)) == f(F(3, 11))


def test_eval_restricted_domain_rejects_outside():
    f = pwl.sawtooth(5, F(1, 5), F(1, 3))
    with pytest.raises(DomainError):
        f(F(2, 5))


coeff_sets = st.lists(st.integers(1, 60), min_size=1, max_size=5)
points = st.fractions(-3, 3, max_denominator=10 ** 4)


@settings(max_examples=60, deadline=None)
@given(coeff_sets, st.lists(points, min_size=1, max_size=30))
def test_envelope_matches_brute_force(coeffs, xs):
    f = pwl.envelope(coeffs)
    for x in xs:
        assert f(x) == brute(coeffs, x)


@settings(max_examples=40, deadline=None)
@given(coeff_sets, coeff_sets, coeff_sets)
def test_min_envelope_algebra(a, b, c):
    f, g, h = pwl.envelope(a), pwl.envelope(b), pwl.envelope(c)
    assert pwl.min_envelope(f, g) == pwl.min_envelope(g, f)
    assert pwl.min_envelope(pwl.min_envelope(f, g), h) == pwl.min_envelope(f, pwl.min_envelope(g, h))
    assert pwl.min_envelope(f, f) == f
    both = pwl.global_max(pwl.min_envelope(f, g)).value
    assert both <= min(pwl.global_max(f).value, pwl.global_max(g).value)


@settings(max_examples=40, deadline=None)
@given(coeff_sets)
def test_canonical_no_collinear_neighbours(coeffs):
    f = pwl.envelope(coeffs)
    assert all(p != q for p, q in zip(f.lines, f.lines[1:]))
    assert all(x < y for x, y in zip(f.xs, f.xs[1:]))
    assert all(0 <= v <= F(1, 2) for v in f.values)
    assert all(isinstance(s, int) for s in f.slopes)


def test_envelope_nonincreasing_in_N():
    prev = None
    xs = [F(k, 997) for k in range(0, 499, 7)]
    for N in range(1, 14):
        f = fib_envelope(N)
        vals = [f(x) for x in xs]
        if prev is not None:
            assert all(v <= p for v, p in zip(vals, prev))
        prev = vals


def test_record_round_trip():
    f = fib_envelope(9)
    assert pwl.from_record(pwl.to_record(f)) == f
    assert pwl.loads(pwl.dumps(f)) == f
    g = pwl.sawtooth(13, F(1, 5), F(1, 3))
    assert pwl.loads(pwl.dumps(g)) == g


def test_record_format():
    text = pwl.dumps(pwl.sawtooth(2))
    lines = text.splitlines()
    assert lines[0].startswith("# pwl v1")
    assert lines[1:] == ["0 1 0 1", "1 4 1 2", "1 2 0 1"]


def test_vertices_kinds():
    kinds = {v.x: v.kind for v in pwl.vertices(fib_envelope(4))}
    assert kinds[F(1, 4)] == "local-max"
    assert kinds[F(1, 3)] == "local-min"
    assert kinds[F(2, 5)] == "local-max"


def test_fold_reduce_equivalence():
    coeffs = [fib(k) for k in range(1, 10)]
    direct = reduce(pwl.min_envelope, map(pwl.sawtooth, coeffs))
    assert direct == pwl.envelope(coeffs)
