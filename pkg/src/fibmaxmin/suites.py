"""Verification suites run by ``fibmaxmin verify``.

Each suite appends records and verdicts to a :class:`ReportBundle`.  The
optional ``limit`` overrides the suite's default range.
"""
from __future__ import annotations

import random
from fractions import Fraction

from . import minmax as mm
from . import planar
from .numeric import (PHI, Surd, binet_exact, cassini, default_cache, double_index_identity,
                      fib, phi_power)
from .report import ReportBundle

# (first N, last N, x_N, d_N)
TABLE1 = [
    (1, 2, Fraction(1, 2), Fraction(1, 2)),
    (3, 3, Fraction(1, 3), Fraction(1, 3)),
    (4, 5, Fraction(1, 4), Fraction(1, 4)),
    (6, 9, Fraction(3, 11), Fraction(2, 11)),
    (10, 13, Fraction(8, 29), Fraction(5, 29)),
    (14, 17, Fraction(21, 76), Fraction(13, 76)),
    (18, 18, Fraction(55, 199), Fraction(34, 199)),
]

PLANAR_T = {2: Fraction(1, 2), 3: Fraction(1, 3), 4: Fraction(1, 4), 5: Fraction(1, 4),
            6: Fraction(1, 5), 7: Fraction(1, 5), 8: Fraction(1, 5)}


def _pts(*pairs):
    return tuple((Fraction(a), Fraction(b)) for a, b in pairs)


PLANAR_MAXIMIZERS = {
    2: _pts(("1/2", "1/2")),
    3: _pts(("1/3", "1/3"), ("2/3", "2/3")),
    4: _pts(("1/4", "1/4"), ("1/4", "1/2"), ("3/4", "1/2"), ("3/4", "3/4")),
    5: _pts(("1/4", "1/4"), ("3/4", "3/4")),
    6: _pts(("1/5", "3/5"), ("2/5", "1/5"), ("3/5", "4/5"), ("4/5", "2/5")),
}


def suite_identities(b: ReportBundle, limit=None):
    top = limit or 200
    n_max = default_cache().n_max
    top = min(top, n_max - 1)
    b.check("recurrence", all(fib(n + 1) == fib(n) + fib(n - 1) for n in range(0, n_max)),
            f"0 <= n < {n_max}")
    b.check("binet", all(binet_exact(n) == fib(n) for n in range(0, top + 1)), f"n <= {top}")
    b.check("cassini", all(cassini(n) == (-1) ** n for n in range(1, top + 1)), f"1 <= n <= {top}")
    t_top = min(limit or 100, (n_max - 1) // 2)
    b.check("double_index", all(double_index_identity(t) for t in range(1, t_top + 1)),
            f"1 <= t <= {t_top}")
    b.check("phi_recurrence",
            all(phi_power(n + 1) == phi_power(n) + phi_power(n - 1) for n in range(1, top)),
            f"1 <= n < {top}")
    b.check("phi_power_vs_product", phi_power(top) == PHI ** top, f"n = {top}")


def suite_table1(b: ReportBundle, limit=None):
    rows = {N: res for N, res in mm.d_values(1, 18)}
    for first, last, x, d in TABLE1:
        for N in range(first, last + 1):
            res = rows[N]
            b.add("table1", {"N": N, "x": res.argmaxes[0], "d": res.value}, annotate=("d",))
            b.check(f"table1.N{N}", res.argmaxes == (x,) and res.value == d,
                    f"x={res.argmaxes[0]} d={res.value}")
        if first >= 6:
            b.check(f"table1.fib_ratio.N{first}",
                    mm.closed_form_x1(first) == x and mm.closed_form_d1(first) == d)


def suite_thm1(b: ReportBundle, limit=None):
    top = limit or 26
    prev = None
    for N, res in mm.d_values(1, top):
        cf = mm.closed_form_d1(N)
        b.check(f"thm1.closed_form.N{N}", res.value == cf, f"d={res.value}")
        b.check(f"thm1.above_limit.N{N}", res.value > mm.LIMIT_D)
        if prev is not None:
            b.check(f"thm1.nonincreasing.N{N}", res.value <= prev)
        prev = res.value
    gap = prev - mm.LIMIT_D
    b.add("thm1", {"N": top, "d": prev, "gap_to_limit": gap}, annotate=("gap_to_limit",))


def suite_lemma3(b: ReportBundle, limit=None):
    top = min(limit or 200, default_cache().n_max - 1)
    bad = [n for n in range(1, top + 1) if not mm.lemma3_holds(n)]
    b.check("lemma3.nearest_integer", not bad, f"1 <= n <= {top}" + (f" failures {bad}" if bad else ""))
    bounds = {4: ("-0.030", "-0.029"), 5: ("0.018", "0.019"),
              6: ("-0.012", "-0.011"), 7: ("0.006", "0.007")}
    for n, (lo, hi) in bounds.items():
        rep = mm.residual(n)
        b.add("residual", {"n": n, "main_term": rep.main_term, "r": rep.r}, annotate=("r",))
        b.check(f"residual.bound.r{n}", Fraction(lo) < rep.r < Fraction(hi), f"({lo}, {hi})")
    reps = [mm.residual(n) for n in range(4, min(top, 100) + 2)]
    b.check("residual.closed_form", all(r.consistent for r in reps))
    b.check("residual.decreasing", all(abs(p.r) > abs(q.r) for p, q in zip(reps, reps[1:])),
            f"4 <= n <= {reps[-1].n - 1}")
    signs = all((r.r.sign() < 0) == (r.n % 4 in (0, 2)) for r in reps)
    b.check("residual.sign_pattern", signs)


def suite_lemma4(b: ReportBundle, limit=None):
    for t in range(1, (limit or 25) + 1):
        b.check(f"lemma4.t{t}", mm.verify_lemma4(t), f"N = {4 * t + 3}")


def suite_props(b: ReportBundle, limit=None):
    for t in range(1, (limit or 25) + 1):
        for c in mm.verify_propositions(t):
            b.check(f"t{t}.{c.name}", c.passed, c.detail)
        for c in mm.lemma5_checks(t, full_domain=t <= 4):
            # the printed mixed-index vertex is reported, not enforced
            b.check(f"t{t}.{c.name}", c.passed, c.detail, informational=c.name.startswith("lemma5.stated"))


def suite_thm2(b: ReportBundle, limit=None):
    top = limit or 40
    b.check("thm2.N1", mm.theorem2_min(1) == Surd(Fraction(1, 2), Fraction(-1, 10)))
    d = mm.alpha1_distances(top)
    running = d[0]
    ok = True
    for N in range(2, top + 1):
        running = min(running, d[N - 1])
        if N >= 4 and running != mm.LIMIT_D:
            ok = False
    b.check("thm2.N4_to_top", ok, f"4 <= N <= {top}")
    b.add("thm2", {"N": top, "min": running}, annotate=("min",))


def suite_thm3(b: ReportBundle, limit=None):
    kmax = limit or 100
    b.check("thm3.eps_1/20", mm.theorem3_search(10, Fraction(1, 20), 50) == 1)
    k = mm.theorem3_search(10, Fraction(1, 1000), kmax)
    b.check("thm3.eps_1/1000", k is not None and k >= 5, f"K={k}")
    b.check("thm3.eps_0_absent", mm.theorem3_search(10, 0, kmax) is None)
    for e in (10, 100, 1000, 10 ** 4, 10 ** 6):
        k = mm.theorem3_search(10, Fraction(1, e), min(kmax, default_cache().n_max - 10))
        b.add("thm3", {"N": 10, "eps": Fraction(1, e), "K": k})
        b.check(f"thm3.found.eps_1/{e}", k is not None, f"K={k}")


def suite_thm4(b: ReportBundle, limit=None):
    top = limit or 8
    prev = None
    for N in range(2, top + 1):
        res = planar.t_value(N)
        b.add("planar", {"N": N, "t": res.t, "maximizers": [list(p) for p in res.maximizers]})
        if N in PLANAR_T:
            b.check(f"thm4.t.N{N}", res.t == PLANAR_T[N], f"t={res.t}")
        if N in PLANAR_MAXIMIZERS:
            b.check(f"thm4.maximizers.N{N}", res.maximizers == PLANAR_MAXIMIZERS[N])
        b.check(f"thm4.profiles.N{N}", all(min(p) == res.t for p in res.profiles))
        if prev is not None:
            b.check(f"thm4.nonincreasing.N{N}", res.t <= prev)
        prev = res.t
    orbit = planar.orbit_fractional_parts("2/5", "1/5", 12)
    period = [Fraction(2, 5), Fraction(1, 5), Fraction(3, 5), Fraction(4, 5)]
    b.check("thm4.orbit_period4", orbit == period * 3)


def suite_windows(b: ReportBundle, limit=None, seed: int = 2014):
    count = limit or 1000
    rng = random.Random(seed)
    worst3 = worst6 = Fraction(0)
    ok = True
    for _ in range(count):
        den = rng.randint(1, 10 ** 6)
        alpha = Fraction(rng.randint(0, den), den)
        K = rng.randint(2, 40)
        three, six = mm.window_bounds_property(alpha, K)
        worst3, worst6 = max(worst3, three), max(worst6, six)
        ok = ok and three <= Fraction(1, 3) and six <= Fraction(1, 5)
    b.add("windows", {"samples": count, "max_three": worst3, "max_six": worst6})
    b.check("windows.three_and_six", ok, f"{count} samples")
    phi_ok = True
    for _ in range(min(count, 200)):
        alpha = Surd(Fraction(rng.randint(-50, 50), rng.randint(1, 50)),
                     Fraction(rng.randint(-50, 50), rng.randint(1, 50)))
        phi_ok = phi_ok and mm.phi_window_property(alpha, rng.randint(1, 40)) <= Fraction(1, 3)
    b.check("windows.phi_three", phi_ok)
    for K in range(1, 13):
        res = mm.d_value(mm.WindowSpec(K, 6))
        b.check(f"windows.d6.K{K}", res.value <= Fraction(1, 5), f"d={res.value}")


SUITES = {
    "identities": suite_identities,
    "table1": suite_table1,
    "thm1": suite_thm1,
    "lemma3": suite_lemma3,
    "lemma4": suite_lemma4,
    "props": suite_props,
    "thm2": suite_thm2,
    "thm3": suite_thm3,
    "thm4": suite_thm4,
    "windows": suite_windows,
}


def run(name: str, bundle: ReportBundle, limit=None) -> ReportBundle:
    names = list(SUITES) if name == "all" else [name]
    for n in names:
        SUITES[n](bundle, limit)
    return bundle

