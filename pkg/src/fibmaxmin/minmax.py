"""One-dimensional max-min quantities for Fibonacci multiples.

Covers the windowed envelopes ``min_{k=K..K+N-1} ||F_k x||`` and their
maxima, the nearest integers ``T_n`` to ``F_n/(phi+2)`` with their residuals,
the instance checks of the explicit envelope on the shrinking segments
around ``1/(phi+2)``, and the evaluations at ``alpha_1 = 1/(phi+2)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from . import pwl
from .errors import DomainError
from .numeric import (PHI, PSI, SQRT5, Surd, default_cache, dist_nearest_int, fib,
                      nearest_integer, phi_power)

ALPHA1 = Surd(Fraction(1, 2), Fraction(-1, 10))  # 1/(phi+2) = (5 - sqrt5)/10
LIMIT_D = Surd(Fraction(-1, 2), Fraction(3, 10))  # (phi-1)/(phi+2) = (3 sqrt5 - 5)/10
FIFTH = Fraction(1, 5)


@dataclass(frozen=True)
class WindowSpec:
    """Index window ``k = K, ..., K+N-1``."""

    K: int
    N: int

    def __post_init__(self):
        if self.K < 1 or self.N < 1:
            raise DomainError(f"window needs K >= 1 and N >= 1, got K={self.K}, N={self.N}")
        n_max = default_cache().n_max
        if self.K + self.N - 1 > n_max:
            raise DomainError(f"window end {self.K + self.N - 1} exceeds n_max={n_max}")

    @property
    def indices(self) -> range:
        return range(self.K, self.K + self.N)

    @property
    def coefficients(self) -> list:
        return [fib(k) for k in self.indices]


@dataclass(frozen=True)
class ResidualReport:
    n: int
    main_term: Fraction
    r: Surd
    closed_form: Surd

    @property
    def consistent(self) -> bool:
        return self.r == self.closed_form


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


# -- envelopes and their maxima -------------------------------------------

def envelope_window(spec: WindowSpec, lo=pwl.ZERO, hi=pwl.HALF) -> pwl.PWL:
    return pwl.envelope(spec.coefficients, lo, hi)


def _profile(spec: WindowSpec, x: Fraction) -> tuple:
    return tuple((k, dist_nearest_int(fib(k) * x)) for k in spec.indices)


def _with_profiles(spec: WindowSpec, res: pwl.MinMaxResult) -> pwl.MinMaxResult:
    profiles = tuple(_profile(spec, x) for x in res.argmaxes)
    return pwl.MinMaxResult(res.value, res.argmaxes, profiles)


def d_value(spec: WindowSpec) -> pwl.MinMaxResult:
    """``d_N^K`` with every maximizer in ``[0, 1/2]`` and its distance profile."""
    return _with_profiles(spec, pwl.global_max(envelope_window(spec)))


def d_values(K: int, N_max: int) -> Iterator[tuple]:
    """Yield ``(N, MinMaxResult)`` for N = 1..N_max, folding incrementally."""
    spec = WindowSpec(K, N_max)
    env = None
    for N, c in enumerate(spec.coefficients, start=1):
        saw = pwl.sawtooth(c)
        env = saw if env is None else pwl.min_envelope(env, saw)
        yield N, _with_profiles(WindowSpec(K, N), pwl.global_max(env))


_SMALL_D1 = {1: Fraction(1, 2), 2: Fraction(1, 2), 3: Fraction(1, 3),
             4: Fraction(1, 4), 5: Fraction(1, 4)}


def closed_form_d1(N: int) -> Fraction:
    """Closed form for ``d_N^1``: tabulated below 6, Fibonacci ratio from 6 on."""
    if N < 1:
        raise DomainError("N must be >= 1")
    if N < 6:
        return _SMALL_D1[N]
    n = (N - 2) // 4
    return Fraction(fib(2 * n + 1), fib(2 * n + 2) + fib(2 * n + 4))


def closed_form_x1(N: int) -> Fraction:
    """Maximizer companion of :func:`closed_form_d1` for N >= 6."""
    if N < 6:
        raise DomainError("maximizer closed form holds for N >= 6")
    n = (N - 2) // 4
    return Fraction(fib(2 * n + 2), fib(2 * n + 2) + fib(2 * n + 4))


# -- nearest integers T_n and residuals -----------------------------------

def nearest_T(n: int) -> int:
    """Alternating sum ``F_{n-2} - F_{n-4} + F_{n-6} - ...``."""
    if n < 1:
        raise DomainError("nearest_T needs n >= 1")
    return sum((-1) ** (k + 1) * fib(n - 2 * k) for k in range(1, n // 2 + 1))


def explicit_T(n: int) -> int:
    """T_n from the closed formulas in F_{4t} and F_{4t-1}, n = 4t + j."""
    if n < 1:
        raise DomainError("explicit_T needs n >= 1")
    t, j = divmod(n, 4)
    a, b = fib(4 * t), fib(4 * t - 1)
    num = {0: 2 * a - b + 1, 1: a + 2 * b - 2, 2: 3 * a + b - 1, 3: 4 * a + 3 * b + 2}[j]
    q, rem = divmod(num, 5)
    if rem:
        raise DomainError(f"explicit formula for n={n} is not integral")
    return q


def scaled_fib(n: int) -> Surd:
    """``F_n / (phi + 2)`` exactly."""
    return fib(n) * ALPHA1


def lemma3_holds(n: int) -> bool:
    """T_n agrees with its explicit formula and is the nearest integer to F_n/(phi+2)."""
    T = nearest_T(n)
    diff = T - scaled_fib(n)
    return T == explicit_T(n) and abs(diff) < Fraction(1, 2) and nearest_integer(scaled_fib(n)) == T


_MAIN_TERM = {0: Fraction(1, 5), 1: Fraction(-2, 5), 2: Fraction(-1, 5), 3: Fraction(2, 5)}
_RESIDUAL_COEFF = {0: 1 - PHI, 1: 2 - PHI, 2: 3 - 2 * PHI, 3: 5 - 3 * PHI}


def residual_closed_form(n: int) -> Surd:
    t, j = divmod(n, 4)
    if t < 1:
        raise DomainError("residual closed form needs n >= 4")
    return _RESIDUAL_COEFF[j] * PSI ** (4 * t - 2) / (SQRT5 * (PHI + 2))


def residual(n: int) -> ResidualReport:
    """``T_n - F_n/(phi+2) = main_term + r`` with ``r`` exact."""
    if n < 4:
        raise DomainError("residual needs n >= 4")
    main = _MAIN_TERM[n % 4]
    r = nearest_T(n) - scaled_fib(n) - main
    return ResidualReport(n, main, r, residual_closed_form(n))


# -- explicit envelope on the segment around 1/(phi+2) ---------------------

def _ratio(T: int, F: int) -> Fraction:
    return Fraction(T, F)


def lemma4_segment(t: int) -> tuple:
    """``[T_{4t+1}/F_{4t+1}, T_{4t}/F_{4t}]``."""
    n = 4 * t
    return _ratio(nearest_T(n + 1), fib(n + 1)), _ratio(nearest_T(n), fib(n))


def lemma4_case_list(t: int) -> list:
    """The ten-piece explicit form of the ``4t+3`` envelope on its segment.

    Entries are ``(a, b, slope, intercept)``.  When ``F_{4t} = 3`` (t = 1) the
    boundary ``(T_{4t}-1)/(F_{4t}-3)`` is 0/0 because the adjacent pieces lie
    on the same line; ``T_{4t+4}/F_{4t+4}`` is used in its place.
    """
    if t < 1:
        raise DomainError("t must be >= 1")
    n = 4 * t
    T = {j: nearest_T(n + j) for j in range(5)}
    F = {j: fib(n + j) for j in range(5)}
    lo, hi = lemma4_segment(t)
    b1 = Fraction(T[3] + T[1] - 1, F[1] + F[3])
    b2 = Fraction(T[3] - 1, F[3])
    b3 = Fraction(T[2] + T[3] - 1, F[3] + F[2])
    b4 = Fraction(T[2], F[2])
    b5 = Fraction(T[2] + 1, F[2] + 3)
    b6 = Fraction(T[0] - 1, F[0] - 3) if F[0] != 3 else Fraction(T[4], F[4])
    b7 = Fraction(T[3] - T[0], F[3] - F[0])
    b8 = Fraction(T[3], F[3])
    b9 = Fraction(T[3] + T[0], F[3] + F[0])
    return [
        (lo, b1, F[1], -T[1]),
        (b1, b2, -F[3], T[3] - 1),
        (b2, b3, F[3], 1 - T[3]),
        (b3, b4, -F[2], T[2]),
        (b4, b5, F[2], -T[2]),
        (b5, b6, -3, 1),
        (b6, b7, -F[0], T[0]),
        (b7, b8, -F[3], T[3]),
        (b8, b9, F[3], -T[3]),
        (b9, hi, -F[0], T[0]),
    ]


def segment_envelope(N: int, lo, hi) -> pwl.PWL:
    """``min_{k<=N} ||F_k x||`` computed only on ``[lo, hi]``."""
    return envelope_window(WindowSpec(1, N), lo, hi)


def verify_lemma4(t: int) -> bool:
    lo, hi = lemma4_segment(t)
    env = segment_envelope(4 * t + 3, lo, hi)
    return pwl.restrict_equal(env, lo, hi, lemma4_case_list(t))


def _chain(values) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


def verify_propositions(t: int) -> list:
    """Instance checks at ``k = t`` of the ordering, zero-set, equality and
    factorization statements used in the inductive step.  Returns a list of
    :class:`Check`.
    """
    if t < 1:
        raise DomainError("t must be >= 1")
    k4 = 4 * t
    T = {j: nearest_T(k4 + j) for j in range(8)}
    F = {j: fib(k4 + j) for j in range(-1, 8)}
    R = {j: Fraction(T[j], F[j]) for j in range(8)}
    lo, hi = R[5], R[4]
    checks = []

    chain = [R[2], R[5], Fraction(T[7] - 1, F[7]), R[6], ALPHA1, R[7], R[4], R[3]]
    checks.append(Check("prop1.chain", _chain(chain)))

    big = segment_envelope(k4 + 7, lo, hi)
    expected_zeros = [R[5], Fraction(T[7] - 1, F[7]), R[6], R[7], R[4]]
    found = pwl.zeros(big)
    checks.append(Check("prop2.zeros", found == expected_zeros,
                        f"found {[str(z) for z in found]}"))

    checks.append(Check("prop3.eq1", R[6] == Fraction(T[2] + 1, F[2] + 3)))
    # cross-multiplied: also meaningful when F_{4t} - 3 = 0
    checks.append(Check("prop3.eq2", T[4] * (F[0] - 3) == (T[0] - 1) * F[4]))
    small = segment_envelope(k4 + 3, lo, hi)
    checks.append(Check("prop3.formula", pwl.restrict_equal(
        small, lo, hi, [(lo, R[6], F[2], -T[2]), (R[6], hi, -3, 1)])))

    # peaks of ||F_j x|| that must fall outside (or inside) the segment
    ineqs = [
        R[5] > Fraction(2 * T[4] - 1, 2 * F[4]),
        Fraction(2 * T[5] + 1, 2 * F[5]) < R[4],
        Fraction(2 * T[6] - 1, 2 * F[6]) < R[5],
        Fraction(2 * T[6] + 1, 2 * F[6]) < R[4],
        Fraction(2 * T[7] - 3, 2 * F[7]) < R[5],
        Fraction(2 * T[7] + 1, 2 * F[7]) > R[4],
    ]
    for i, ok in enumerate(ineqs, start=1):
        checks.append(Check(f"prop4.inequality{i}", ok))
    m5, m6, m7 = (Fraction(2 * T[5] + 1, 2 * F[5]), Fraction(2 * T[6] + 1, 2 * F[6]),
                  Fraction(2 * T[7] - 1, 2 * F[7]))
    z7 = Fraction(T[7] - 1, F[7])
    cases = {
        4: [(lo, hi, -F[4], T[4])],
        5: [(lo, m5, F[5], -T[5]), (m5, hi, -F[5], T[5] + 1)],
        6: [(lo, R[6], -F[6], T[6]), (R[6], m6, F[6], -T[6]), (m6, hi, -F[6], T[6] + 1)],
        7: [(lo, z7, -F[7], T[7] - 1), (z7, m7, F[7], 1 - T[7]),
            (m7, R[7], -F[7], T[7]), (R[7], hi, F[7], -T[7])],
    }
    for j, case in cases.items():
        saw = pwl.sawtooth(F[j], lo, hi)
        checks.append(Check(f"prop4.sawtooth{j}", pwl.restrict_equal(saw, lo, hi, case)))

    f = fib
    checks.append(Check("prop5.T", nearest_T(k4 + 2) + 1 == f(2 * t - 1) * f(2 * t + 2)))
    checks.append(Check("prop5.F", f(k4 + 2) + 3 == f(2 * t - 1) * (f(2 * t + 2) + f(2 * t + 4))))
    x = Fraction(T[2] + 1, F[2] + 3)
    checks.append(Check("prop5.x", x == Fraction(f(2 * t + 2), f(2 * t + 2) + f(2 * t + 4))))
    checks.append(Check("prop5.y", 1 - 3 * x == Fraction(f(2 * t + 1), f(2 * t + 2) + f(2 * t + 4))))
    return checks


def lemma5_checks(t: int, full_domain: bool = False) -> list:
    """Vertex checks for the ``4t+3`` envelope.

    ``vertex`` compares the maximum on the segment with
    ``((T_{4t+2}+1)/(F_{4t+2}+3), 1 - 3x)``.  For t >= 2 the mixed-index
    point written for the inductive step, ``x = (T_{4k+6}+1)/(F_{4k+6}+3)``
    with ``k = t-1``, is checked coordinate by coordinate against the same
    maximum.  With ``full_domain`` the envelope is built on all of
    ``[0, 1/2]`` (feasible only for small t) and the count of vertices above
    ``(phi-1)/(phi+2)`` is reported.
    """
    n = 4 * t
    lo, hi = lemma4_segment(t)
    env = segment_envelope(n + 3, lo, hi)
    best = pwl.global_max(env)
    x = Fraction(nearest_T(n + 2) + 1, fib(n + 2) + 3)
    y = 1 - 3 * x
    checks = [Check("lemma5.vertex", best.argmaxes == (x,) and best.value == y,
                    f"max {best.value} at {[str(a) for a in best.argmaxes]}")]
    if t >= 2:
        k = t - 1
        xs = Fraction(nearest_T(4 * k + 6) + 1, fib(4 * k + 6) + 3)
        ys = 1 - 3 * Fraction(nearest_T(4 * k + 2) + 1, fib(4 * k + 2) + 3)
        checks.append(Check("lemma5.stated_x", best.argmaxes == (xs,), f"stated x = {xs}"))
        checks.append(Check("lemma5.stated_y", best.value == ys, f"stated y = {ys}"))
    if full_domain:
        full = segment_envelope(n + 3, pwl.ZERO, pwl.HALF)
        above = [v for v in pwl.vertices(full) if v.y > LIMIT_D]
        checks.append(Check("lemma5.unique_above",
                            len(above) == 1 and above[0].x == x and above[0].y == y,
                            f"{len(above)} vertices above the limit line"))
    return checks


# -- evaluations at alpha_1 ------------------------------------------------

def alpha1_distances(n_end: int, n_start: int = 1) -> list:
    return [dist_nearest_int(fib(n) * ALPHA1) for n in range(n_start, n_end + 1)]


def theorem2_min(N: int) -> Surd:
    """``min_{n<=N} ||F_n / (phi+2)||`` exactly."""
    if N < 1:
        raise DomainError("N must be >= 1")
    return min(alpha1_distances(N))


def theorem3_search(N: int, eps, K_max: int) -> Optional[int]:
    """Smallest K <= K_max with ``min_{k=K..K+N} ||F_k alpha_1|| > 1/5 - eps``."""
    eps = Fraction(eps)
    if eps < 0 or N < 1 or K_max < 1:
        raise DomainError("need eps >= 0, N >= 1, K_max >= 1")
    if K_max + N > default_cache().n_max:
        raise DomainError("K_max + N exceeds n_max")
    dist = alpha1_distances(K_max + N)
    bound = FIFTH - eps
    for K in range(1, K_max + 1):
        if min(dist[K - 1:K + N]) > bound:
            return K
    return None


def window_bounds_property(alpha, K: int) -> tuple:
    """(min over F_{K-1..K+1}, min over F_{K..K+5}) of ``||F_j alpha||``."""
    if K < 2:
        raise DomainError("K must be >= 2")
    if K + 5 > default_cache().n_max:
        raise DomainError("K + 5 exceeds n_max")
    alpha = Fraction(alpha)
    three = min(dist_nearest_int(fib(j) * alpha) for j in (K - 1, K, K + 1))
    six = min(dist_nearest_int(fib(j) * alpha) for j in range(K, K + 6))
    return three, six


def phi_window_property(alpha, n: int):
    """``min_{j=n-1,n,n+1} ||phi^j alpha||`` for alpha in Q(sqrt5)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    alpha = Surd.coerce(alpha)
    return min(dist_nearest_int(phi_power(j) * alpha) for j in (n - 1, n, n + 1))


def dubickas_constant() -> Surd:
    """``1/(2 phi) = (sqrt5 - 1)/4``."""
    return Surd(Fraction(-1, 4), Fraction(1, 4))
