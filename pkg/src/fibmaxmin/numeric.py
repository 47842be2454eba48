"""Exact arithmetic kernel: rationals, the field Q(sqrt5), Fibonacci and Lucas numbers.

Rationals are plain :class:`fractions.Fraction` objects.  Elements of Q(sqrt5)
are :class:`Surd` instances ``a + b*sqrt5`` whose ordering is decided with
integer arithmetic only.
"""
from __future__ import annotations

import os
import re
from decimal import Decimal, localcontext
from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC
from typing import Union

from .errors import DomainError, IndexRangeError, InvariantViolation

Number = Union[int, Fraction, "Surd"]

DEFAULT_N_MAX = 256
NMAX_ENV = "FIBMAXMIN_NMAX"


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, _RationalABC)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot convert {type(v).__name__} to an exact rational")


class Surd:
    """The number ``a + b*sqrt5`` with rational ``a`` and ``b``.

    Instances are immutable and hashable.  Comparisons never touch floating
    point.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("Surd is immutable")

    @classmethod
    def coerce(cls, v) -> "Surd":
        if isinstance(v, Surd):
            return v
        return cls(v, 0)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return Surd(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return Surd(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return Surd.coerce(other) - self

    def __mul__(self, other):
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return Surd(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 5 b^2``."""
        return self.a * self.a - 5 * self.b * self.b

    def __truediv__(self, other):
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        return self * o.conjugate() * Surd(1 / n)

    def __rtruediv__(self, other):
        return Surd.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return Surd(1) / (self ** -k)
        result, base = Surd(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- ordering ---------------------------------------------------------

    def sign(self) -> int:
        return surd_sign(self)

    def _cmp(self, other) -> int:
        return (self - Surd.coerce(other)).sign()

    def __eq__(self, other):
        if isinstance(other, Surd):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other):
        if not isinstance(other, (Surd, int, Fraction)):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        if not isinstance(other, (Surd, int, Fraction)):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, (Surd, int, Fraction)):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        if not isinstance(other, (Surd, int, Fraction)):
            return NotImplemented
        return self._cmp(other) >= 0

    # -- rounding ---------------------------------------------------------

    def __floor__(self) -> int:
        return surd_floor(self)

    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self):
        return float(self.to_decimal(20))

    def to_decimal(self, digits: int = 30) -> Decimal:
        """Decimal rendering with ``digits`` significant digits (annotation only)."""
        with localcontext() as ctx:
            ctx.prec = digits + 10
            a = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            b = Decimal(self.b.numerator) / Decimal(self.b.denominator)
            v = a + b * Decimal(5).sqrt()
            ctx.prec = digits
            return +v

    def __repr__(self):
        return f"Surd({self.a!s}, {self.b!s})"

    def __str__(self):
        return format_surd(self)


_SURD_RE = re.compile(r"^\s*\(([^()]+)\)\s*\+\s*\(([^()]+)\)\s*(?:·|\*)\s*sqrt5\s*$")


def format_surd(s: Surd) -> str:
    """Exact text form ``(a) + (b)·sqrt5``."""
    return f"({s.a}) + ({s.b})·sqrt5"


def parse_surd(text: str) -> Surd:
    m = _SURD_RE.match(text)
    if not m:
        raise ValueError(f"not a surd literal: {text!r}")
    return Surd(Fraction(m.group(1).strip()), Fraction(m.group(2).strip()))


def surd_sign(s: Surd) -> int:
    """Sign of ``a + b*sqrt5`` decided in integers."""
    sa, sb = _sign(s.a), _sign(s.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: the larger magnitude wins; compare a^2 with 5 b^2
    return sa * _sign(s.a * s.a - 5 * s.b * s.b)


def surd_floor(s: Surd) -> int:
    """Exact floor of a Surd: integer estimate, then confirm by sign tests."""
    if s.b == 0:
        return s.a.numerator // s.a.denominator
    p, q = s.b.numerator, s.b.denominator
    scale = 1 << 64
    root = isqrt(5 * p * p * scale * scale)
    approx = Fraction(root if p > 0 else -root, q * scale)
    g = (s.a + approx).__floor__()
    while surd_sign(s - g) < 0:
        g -= 1
    while surd_sign(s - (g + 1)) >= 0:
        g += 1
    return g


def floor_exact(v) -> int:
    if isinstance(v, Surd):
        return surd_floor(v)
    return _as_fraction(v).__floor__()


def dist_nearest_int(v):
    """``||v||``: distance to the nearest integer, same numeric kind as ``v``.

    Half-integers map to exactly 1/2.
    """
    if isinstance(v, Surd):
        f = v - surd_floor(v)
        return f if f <= Fraction(1, 2) else 1 - f
    v = _as_fraction(v)
    f = v - v.__floor__()
    return f if f <= Fraction(1, 2) else 1 - f


def nearest_integer(v) -> int:
    """Nearest integer, ties toward the even integer."""
    g = floor_exact(v)
    frac = v - g
    half = Fraction(1, 2)
    if frac < half:
        return g
    if frac > half:
        return g + 1
    return g if g % 2 == 0 else g + 1


# -- constants in Q(sqrt5) -------------------------------------------------

SQRT5 = Surd(0, 1)
PHI = Surd(Fraction(1, 2), Fraction(1, 2))
PSI = Surd(Fraction(1, 2), Fraction(-1, 2))  # 1 - phi = -1/phi


# -- Fibonacci / Lucas ----------------------------------------------------


class FibCache:
    """Tables of F_n for -1 <= n <= n_max and L_n for 0 <= n <= n_max."""

    def __init__(self, n_max: int = DEFAULT_N_MAX):
        if n_max < 2:
            raise DomainError("n_max must be at least 2")
        self.n_max = n_max
        fib = [1, 0]  # F_{-1}, F_0
        for _ in range(n_max):
            fib.append(fib[-1] + fib[-2])
        self._fib = tuple(fib)
        luc = [2, 1]
        for _ in range(n_max - 1):
            luc.append(luc[-1] + luc[-2])
        self._luc = tuple(luc)

    def fib(self, n: int) -> int:
        if not -1 <= n <= self.n_max:
            raise IndexRangeError(f"Fibonacci index {n} outside [-1, {self.n_max}]")
        return self._fib[n + 1]

    def lucas(self, n: int) -> int:
        if not 0 <= n <= self.n_max:
            raise IndexRangeError(f"Lucas index {n} outside [0, {self.n_max}]")
        return self._luc[n]


def _default_n_max() -> int:
    raw = os.environ.get(NMAX_ENV)
    if raw is None:
        return DEFAULT_N_MAX
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{NMAX_ENV} must be an integer, got {raw!r}") from None


_CACHE = FibCache(_default_n_max())


def default_cache() -> FibCache:
    return _CACHE


def fib(n: int) -> int:
    """F_n with F_{-1} = 1, F_0 = 0, F_1 = F_2 = 1."""
    return _CACHE.fib(n)


def lucas(n: int) -> int:
    return _CACHE.lucas(n)


def phi_power(n: int) -> Surd:
    """phi^n = (L_n + F_n sqrt5) / 2."""
    if n < 0:
        raise DomainError("phi_power needs n >= 0")
    return Surd(Fraction(lucas(n), 2), Fraction(fib(n), 2))


def binet_exact(n: int) -> int:
    """F_n from Binet's formula evaluated in Q(sqrt5) by repeated squaring."""
    if n < 0:
        raise DomainError("binet_exact needs n >= 0")
    v = (PHI ** n - PSI ** n) / SQRT5
    if v.b != 0 or v.a.denominator != 1:
        raise InvariantViolation(f"Binet value for n={n} is not an integer: {v!r}")
    return v.a.numerator


def cassini(n: int) -> int:
    """F_{n+1} F_{n-1} - F_n^2, which equals (-1)^n."""
    if n < 1:
        raise DomainError("cassini needs n >= 1")
    return fib(n + 1) * fib(n - 1) - fib(n) ** 2


def double_index_identity(t: int) -> bool:
    """F_{2t} == F_{t+1}^2 - F_{t-1}^2."""
    if t < 1:
        raise DomainError("double_index_identity needs t >= 1")
    return fib(2 * t) == fib(t + 1) ** 2 - fib(t - 1) ** 2


def format_rational(v) -> str:
    v = _as_fraction(v)
    return f"{v.numerator}/{v.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
