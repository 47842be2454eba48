"""Exact piecewise-linear functions and their lower envelopes.

A :class:`PWL` lives on a closed rational interval, by default the
fundamental domain ``[0, 1/2]`` of a 1-periodic function symmetric about
``x = 1/2``.  Each piece is stored as a line ``y = slope*x + intercept``;
for the distance functions ``||c x||`` and all their minima the slope and
intercept are integers, so evaluation and comparisons reduce to integer
arithmetic.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import CaseListError, DomainError
from .numeric import dist_nearest_int

HALF = Fraction(1, 2)
ZERO = Fraction(0)

Line = tuple  # (slope, intercept)


def _line_at(line, x: Fraction):
    s, c = line
    return s * x + c


def _diff_sign(lf, lg, x: Fraction) -> int:
    """Sign of lf(x) - lg(x)."""
    ds = lf[0] - lg[0]
    dc = lf[1] - lg[1]
    v = ds * x.numerator + dc * x.denominator
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class PWL:
    """Continuous piecewise-linear function in canonical form.

    ``xs`` holds the breakpoints (strictly increasing, ``len(lines) + 1``
    entries) and ``lines[i]`` the ``(slope, intercept)`` pair used on
    ``[xs[i], xs[i+1]]``.  Adjacent pieces never share a line.
    """

    xs: tuple
    lines: tuple
    periodic: bool = field(default=True, compare=False)

    def __post_init__(self):
        if len(self.xs) != len(self.lines) + 1 or not self.lines:
            raise DomainError("PWL needs at least one piece and len(xs) == len(lines) + 1")

    @property
    def lo(self) -> Fraction:
        return self.xs[0]

    @property
    def hi(self) -> Fraction:
        return self.xs[-1]

    @property
    def breakpoints(self) -> tuple:
        return self.xs

    @property
    def values(self) -> tuple:
        vals = [_line_at(ln, x) for ln, x in zip(self.lines, self.xs)]
        vals.append(_line_at(self.lines[-1], self.xs[-1]))
        return tuple(Fraction(v) for v in vals)

    @property
    def slopes(self) -> tuple:
        return tuple(s for s, _ in self.lines)

    def __len__(self):
        return len(self.lines)

    def pieces(self):
        """Yield ``(lo, hi, slope, intercept)`` for every piece."""
        for i, (s, c) in enumerate(self.lines):
            yield self.xs[i], self.xs[i + 1], s, c

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def restrict(self, lo, hi) -> "PWL":
        lo, hi = Fraction(lo), Fraction(hi)
        if not (self.lo <= lo < hi <= self.hi):
            raise DomainError(f"[{lo}, {hi}] is not inside [{self.lo}, {self.hi}]")
        i = max(bisect.bisect_right(self.xs, lo) - 1, 0)
        j = bisect.bisect_left(self.xs, hi)
        xs = [lo, *self.xs[i + 1:j], hi]
        return PWL(tuple(xs), self.lines[i:j], self.periodic and lo == 0 and hi == HALF)


@dataclass(frozen=True)
class Vertex:
    x: Fraction
    y: Fraction
    kind: str  # "local-max", "local-min", "slope-change"


@dataclass(frozen=True)
class MinMaxResult:
    """Extremal value with every argmax and, optionally, per-index profiles."""

    value: Fraction
    argmaxes: tuple
    witness_profile: tuple = ()


class _Builder:
    """Accumulates pieces, merging any that continue the previous line."""

    __slots__ = ("xs", "lines")

    def __init__(self, start):
        self.xs = [start]
        self.lines = []

    def add(self, end, line):
        if end == self.xs[-1]:
            return
        if self.lines and self.lines[-1] == line:
            self.xs[-1] = end
        else:
            self.lines.append(line)
            self.xs.append(end)

    def build(self, periodic=True) -> PWL:
        return PWL(tuple(self.xs), tuple(self.lines), periodic)


def canonical(xs: Sequence, lines: Sequence, periodic: bool = True) -> PWL:
    """Drop zero-length pieces and merge adjacent pieces on the same line."""
    if len(xs) != len(lines) + 1:
        raise DomainError("len(xs) must be len(lines) + 1")
    b = _Builder(Fraction(xs[0]))
    for i, ln in enumerate(lines):
        b.add(Fraction(xs[i + 1]), (ln[0], ln[1]))
    if not b.lines:
        raise DomainError("PWL has zero width")
    return b.build(periodic)


def sawtooth(c: int, lo=ZERO, hi=HALF) -> PWL:
    """``x -> ||c x||`` on ``[lo, hi]`` (default the fundamental domain)."""
    if c == 0:
        raise DomainError("sawtooth coefficient must be nonzero")
    c = abs(c)
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise DomainError("empty interval")
    two_c = 2 * c
    j = (two_c * lo).__floor__()
    j_end = (two_c * hi).__ceil__()
    xs = [lo]
    lines = []
    for k in range(j, j_end):
        # half-period [k/2c, (k+1)/2c]: rising from t=k/2 or falling to t=(k+1)/2
        line = (c, -(k // 2)) if k % 2 == 0 else (-c, (k + 1) // 2)
        end = Fraction(k + 1, two_c)
        lines.append(line)
        xs.append(end if end < hi else hi)
        if end >= hi:
            break
    return PWL(tuple(xs), tuple(lines), lo == 0 and hi == HALF)


def min_envelope(f: PWL, g: PWL) -> PWL:
    """Pointwise minimum of two PWLs on the same interval, canonical form."""
    if f.lo != g.lo or f.hi != g.hi:
        raise DomainError("min_envelope needs both functions on the same interval")
    fx, fl, gx, gl = f.xs, f.lines, g.xs, g.lines
    i = j = 0
    nf, ng = len(fl), len(gl)
    a = f.lo
    out = _Builder(a)
    while i < nf and j < ng:
        xf, xg = fx[i + 1], gx[j + 1]
        b = xf if xf <= xg else xg
        lf, lg = fl[i], gl[j]
        if lf == lg:
            out.add(b, lf)
        else:
            sa = _diff_sign(lf, lg, a)
            sb = _diff_sign(lf, lg, b)
            if sa <= 0 and sb <= 0:
                out.add(b, lf)
            elif sa >= 0 and sb >= 0:
                out.add(b, lg)
            else:
                cross = Fraction(lg[1] - lf[1]) / (lf[0] - lg[0])
                if sa < 0:
                    out.add(cross, lf)
                    out.add(b, lg)
                else:
                    out.add(cross, lg)
                    out.add(b, lf)
        a = b
        if xf == b:
            i += 1
        if xg == b:
            j += 1
    return out.build(f.periodic and g.periodic)


def envelope(coeffs: Iterable[int], lo=ZERO, hi=HALF) -> PWL:
    """Fold ``min_envelope`` over ``sawtooth(c)`` for each coefficient."""
    return reduce(min_envelope, (sawtooth(c, lo, hi) for c in coeffs))


def fold_to_domain(x) -> Fraction:
    """Reduce x by period 1 and the reflection x -> 1 - x into [0, 1/2]."""
    return dist_nearest_int(Fraction(x))


def evaluate(f: PWL, x) -> Fraction:
    """Exact value of ``f`` at ``x``.

    For functions on the fundamental domain, ``x`` is folded first; for
    restricted domains it must already lie in ``[lo, hi]``.
    """
    x = Fraction(x)
    if f.periodic and not (f.lo <= x <= f.hi):
        x = fold_to_domain(x)
    if not (f.lo <= x <= f.hi):
        raise DomainError(f"{x} outside [{f.lo}, {f.hi}]")
    i = bisect.bisect_right(f.xs, x) - 1
    i = min(max(i, 0), len(f.lines) - 1)
    return Fraction(_line_at(f.lines[i], x))


def global_max(f: PWL) -> MinMaxResult:
    """Maximum over the domain with every maximizing breakpoint, increasing x."""
    vals = f.values
    best = max(vals)
    return MinMaxResult(best, tuple(x for x, v in zip(f.xs, vals) if v == best))


def zeros(f: PWL) -> list:
    """All x in the domain with f(x) = 0, increasing.

    A piece that vanishes identically contributes its two endpoints.
    """
    out = []
    for lo, hi, s, c in f.pieces():
        if s == 0:
            if c == 0:
                out.extend((lo, hi))
            continue
        x = Fraction(-c) / s
        if lo <= x <= hi:
            out.append(x)
    return sorted(set(out))


def vertices(f: PWL) -> list:
    """Breakpoints of the graph, classified by the slopes on either side."""
    out = []
    sl = f.slopes
    vals = f.values
    for k, (x, y) in enumerate(zip(f.xs, vals)):
        left = sl[k - 1] if k > 0 else None
        right = sl[k] if k < len(sl) else None
        if left is None:
            kind = "local-max" if right < 0 else "local-min"
        elif right is None:
            kind = "local-max" if left > 0 else "local-min"
        elif left > 0 > right:
            kind = "local-max"
        elif left < 0 < right:
            kind = "local-min"
        else:
            kind = "slope-change"
        out.append(Vertex(x, y, kind))
    return out


def from_pieces(pieces: Sequence, lo=None, hi=None) -> PWL:
    """Build a canonical PWL from an explicit case list.

    ``pieces`` is a sequence of ``(a, b, slope, intercept)``; consecutive
    intervals must abut exactly and, when given, cover ``[lo, hi]``.
    The function must be continuous at every junction.
    """
    if not pieces:
        raise CaseListError("empty case list")
    xs = [Fraction(pieces[0][0])]
    lines = []
    for k, (a, b, s, c) in enumerate(pieces):
        a, b = Fraction(a), Fraction(b)
        if a != xs[-1]:
            kind = "gap" if a > xs[-1] else "overlap"
            raise CaseListError(f"{kind} at piece {k}: starts at {a}, previous ends at {xs[-1]}")
        if b < a:
            raise CaseListError(f"piece {k} has reversed bounds [{a}, {b}]")
        if lines and _line_at(lines[-1], a) != _line_at((s, c), a):
            raise CaseListError(f"discontinuity at x = {a}")
        lines.append((s, c))
        xs.append(b)
    if lo is not None and xs[0] != Fraction(lo):
        raise CaseListError(f"case list starts at {xs[0]}, expected {lo}")
    if hi is not None and xs[-1] != Fraction(hi):
        raise CaseListError(f"case list ends at {xs[-1]}, expected {hi}")
    periodic = xs[0] == 0 and xs[-1] == HALF
    return canonical(xs, lines, periodic)


def restrict_equal(f: PWL, lo, hi, pieces: Sequence) -> bool:
    """True iff ``f`` on ``[lo, hi]`` coincides with the explicit case list."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise CaseListError(f"empty interval [{lo}, {hi}]")
    expected = from_pieces(pieces, lo, hi)
    actual = f.restrict(lo, hi)
    return actual.xs == expected.xs and _norm_lines(actual) == _norm_lines(expected)


def _norm_lines(f: PWL):
    return tuple((Fraction(s), Fraction(c)) for s, c in f.lines)


# -- serialization ---------------------------------------------------------

RECORD_HEADER = "# pwl v1"


def to_record(f: PWL) -> list:
    """Ordered ``(x_num, x_den, y_num, y_den)`` quadruples at every breakpoint."""
    return [(x.numerator, x.denominator, y.numerator, y.denominator)
            for x, y in zip(f.xs, f.values)]


def from_record(quads: Sequence) -> PWL:
    if len(quads) < 2:
        raise DomainError("a PWL record needs at least two points")
    pts = [(Fraction(xn, xd), Fraction(yn, yd)) for xn, xd, yn, yd in quads]
    xs = [pts[0][0]]
    lines = []
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x1 <= x0:
            raise DomainError("record x-coordinates must be strictly increasing")
        s = (y1 - y0) / (x1 - x0)
        c = y0 - s * x0
        s = s.numerator if s.denominator == 1 else s
        c = c.numerator if c.denominator == 1 else c
        lines.append((s, c))
        xs.append(x1)
    return canonical(xs, lines, xs[0] == 0 and xs[-1] == HALF)


def dumps(f: PWL) -> str:
    """Text record: header line, then one ``x_num x_den y_num y_den`` per line."""
    rows = [f"{RECORD_HEADER} points={len(f.xs)} lo={f.lo} hi={f.hi}"]
    rows += [" ".join(map(str, q)) for q in to_record(f)]
    return "\n".join(rows) + "\n"


def loads(text: str) -> PWL:
    quads = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4:
            raise DomainError(f"bad record line: {raw!r}")
        quads.append(tuple(int(p) for p in parts))
    return from_record(quads)
