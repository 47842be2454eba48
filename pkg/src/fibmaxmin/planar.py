"""Max over the unit square of ``min_{n<=N} ||G_n(x, y)||``.

``G_1 = x``, ``G_2 = y`` and ``G_n = G_{n-1} + G_{n-2}``, so
``G_n = F_{n-2} x + F_{n-1} y``.  Every ``||G_n||`` is affine on each cell of
the arrangement formed by its zero lines (integer levels) and peak lines
(half-integer levels).  Inside such a cell two distances ``||G_i||`` and
``||G_j||`` can only trade places across a line ``G_i +- G_j = integer``, so
adding those balance lines yields cells on which the minimum is a single
affine function.  Its maximum over a cell is taken at a cell vertex, hence
at a pairwise intersection of arrangement lines.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import DomainError
from .numeric import dist_nearest_int, fib

N_CAP = 16


@dataclass(frozen=True)
class LinearForm:
    a: int
    b: int

    def __call__(self, x, y):
        return self.a * x + self.b * y


@dataclass(frozen=True)
class CreaseLine:
    """The line ``a x + b y = level`` of form ``form_index``."""

    form_index: int
    level: Fraction
    a: int
    b: int

    @property
    def is_zero_line(self) -> bool:
        return self.level.denominator == 1


@dataclass(frozen=True)
class PlanarResult:
    N: int
    t: Fraction
    maximizers: tuple
    profiles: tuple


def form_for(n: int) -> LinearForm:
    if n < 1:
        raise DomainError("n must be >= 1")
    return LinearForm(fib(n - 2), fib(n - 1))


def _check_N(N: int):
    if not 2 <= N <= N_CAP:
        raise DomainError(f"N must lie in [2, {N_CAP}], got {N}")


def _level_range(a: int, b: int) -> tuple:
    """Range of ``a x + b y`` over the unit square."""
    return min(0, a) + min(0, b), max(0, a) + max(0, b)


def crease_lines(N: int) -> list:
    """Zero lines and peak lines of ``||G_n||`` for n <= N meeting the square."""
    _check_N(N)
    out = []
    for n in range(1, N + 1):
        f = form_for(n)
        lo, hi = _level_range(f.a, f.b)
        for h2 in range(2 * lo, 2 * hi + 1):
            out.append(CreaseLine(n, Fraction(h2, 2), f.a, f.b))
    return out


def _normalize(a: int, b: int, c: int) -> tuple:
    g = gcd(gcd(a, b), c)
    a, b, c = a // g, b // g, c // g
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return a, b, c


def arrangement_lines(N: int) -> list:
    """Integer triples ``(a, b, c)`` for every line ``a x + b y = c``.

    Contains the square boundary, all crease lines and all balance lines
    ``G_i +- G_j = integer``; deduplicated and sorted.
    """
    _check_N(N)
    lines = {_normalize(1, 0, 0), _normalize(1, 0, 1), _normalize(0, 1, 0), _normalize(0, 1, 1)}
    for cl in crease_lines(N):
        lines.add(_normalize(2 * cl.a, 2 * cl.b, int(2 * cl.level)))
    forms = [form_for(n) for n in range(1, N + 1)]
    for f, g in combinations(forms, 2):
        for a, b in ((f.a + g.a, f.b + g.b), (f.a - g.a, f.b - g.b)):
            if a == 0 and b == 0:
                continue
            lo, hi = _level_range(a, b)
            for c in range(lo, hi + 1):
                lines.add(_normalize(a, b, c))
    return sorted(lines)


def _iter_vertices(N: int):
    """Yield reduced ``(x_num, y_num, den)`` for each line pair meeting in the
    square; a point on several lines is yielded more than once."""
    lines = arrangement_lines(N)
    for i, (a1, b1, c1) in enumerate(lines):
        for a2, b2, c2 in lines[i + 1:]:
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            xn = c1 * b2 - c2 * b1
            yn = a1 * c2 - a2 * c1
            if det < 0:
                det, xn, yn = -det, -xn, -yn
            if 0 <= xn <= det and 0 <= yn <= det:
                g = gcd(gcd(xn, yn), det)
                yield xn // g, yn // g, det // g


def candidate_vertices(N: int) -> list:
    """Every vertex of the line arrangement inside the closed unit square."""
    return sorted((Fraction(x, d), Fraction(y, d)) for x, y, d in set(_iter_vertices(N)))


def _min_dist(forms, x: int, y: int, d: int) -> int:
    """Numerator over ``d`` of ``min_n ||(a x + b y)/d||``."""
    best = d
    for a, b in forms:
        v = (a * x + b * y) % d
        if d - v < v:
            v = d - v
        if v < best:
            best = v
            if v == 0:
                break
    return best


def orbit_profile(x, y, N: int) -> list:
    """``||G_n(x, y)||`` for n = 1..N."""
    if N < 1:
        raise DomainError("N must be >= 1")
    x, y = Fraction(x), Fraction(y)
    return [dist_nearest_int(form_for(n)(x, y)) for n in range(1, N + 1)]


def orbit_fractional_parts(x, y, N: int) -> list:
    x, y = Fraction(x), Fraction(y)
    out = []
    for n in range(1, N + 1):
        v = form_for(n)(x, y)
        out.append(v - v.__floor__())
    return out


def t_value(N: int) -> PlanarResult:
    """Exact ``t_N`` with every maximizing arrangement vertex, sorted."""
    forms = [(f.a, f.b) for f in map(form_for, range(1, N + 1))]
    best_num, best_den = -1, 1
    winners = set()
    for x, y, d in _iter_vertices(N):
        num = _min_dist(forms, x, y, d)
        lhs, rhs = num * best_den, best_num * d
        if lhs > rhs:
            best_num, best_den = num, d
            winners = {(x, y, d)}
        elif lhs == rhs:
            winners.add((x, y, d))
    t = Fraction(best_num, best_den)
    maxim = tuple(sorted((Fraction(x, d), Fraction(y, d)) for x, y, d in winners))
    profiles = tuple(tuple(orbit_profile(px, py, N)) for px, py in maxim)
    return PlanarResult(N, t, maxim, profiles)


def sample_audit(N: int, count: int, seed: int = 0, max_den: int = 10 ** 6) -> Fraction:
    """Best value of the N-term minimum over pseudo-random rational points."""
    _check_N(N)
    rng = random.Random(seed)
    forms = [(f.a, f.b) for f in map(form_for, range(1, N + 1))]
    best = Fraction(0)
    for _ in range(count):
        d = rng.randint(1, max_den)
        x, y = rng.randint(0, d), rng.randint(0, d)
        v = Fraction(_min_dist(forms, x, y, d), d)
        if v > best:
            best = v
    return best
