"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import minmax as mm
from . import planar, pwl, suites
from .errors import DomainError, IndexRangeError
from .report import DEFAULT_DIGITS, ReportBundle
from .svg import envelope_svg, planar_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _write(path: str, text: str):
    Path(path).write_text(text, encoding="utf-8")


def cmd_table1(args) -> ReportBundle:
    b = ReportBundle("table1", digits=args.digits)
    suites.suite_table1(b)
    return b


def cmd_envelope(args) -> ReportBundle:
    spec = mm.WindowSpec(args.K, args.N)
    b = ReportBundle(f"envelope --from {args.K} --len {args.N}", digits=args.digits)
    f = mm.envelope_window(spec)
    best = pwl.global_max(f)
    b.add("envelope", {"K": args.K, "N": args.N, "pieces": len(f),
                       "record": [list(q) for q in pwl.to_record(f)]})
    b.add("max", {"value": best.value, "argmaxes": list(best.argmaxes)}, annotate=("value",))
    if args.svg:
        pts = [(x, best.value) for x in best.argmaxes]
        _write(args.svg, envelope_svg(f, pts, mm.LIMIT_D, f"envelope K={args.K} N={args.N}"))
    return b


def cmd_dn(args) -> ReportBundle:
    spec = mm.WindowSpec(args.K, args.N)
    res = mm.d_value(spec)
    b = ReportBundle(f"dn --from {args.K} --len {args.N}", digits=args.digits)
    b.add("d", {"K": args.K, "N": args.N, "value": res.value,
                "argmaxes": list(res.argmaxes)}, annotate=("value",))
    for x, prof in zip(res.argmaxes, res.witness_profile):
        b.add("profile", {"x": x, "distances": [[k, v] for k, v in prof]})
        b.check(f"profile_min.x={x}", min(v for _, v in prof) == res.value)
    if args.K == 1:
        b.check("closed_form", res.value == mm.closed_form_d1(args.N))
    return b


def cmd_planar(args) -> ReportBundle:
    res = planar.t_value(args.N)
    b = ReportBundle(f"planar --n {args.N}", digits=args.digits)
    b.add("planar", {"N": args.N, "t": res.t, "maximizers": [list(p) for p in res.maximizers]},
          annotate=("t",))
    for p, prof in zip(res.maximizers, res.profiles):
        b.add("profile", {"point": list(p), "distances": list(prof)})
    b.check("profiles_attain_t", all(min(p) == res.t for p in res.profiles))
    if args.svg:
        _write(args.svg, planar_svg(planar.crease_lines(args.N), res.maximizers, f"t_{args.N}"))
    return b


def cmd_alpha1(args) -> ReportBundle:
    b = ReportBundle(f"alpha1 --len {args.N} --eps {args.eps} --kmax {args.kmax}",
                     digits=args.digits)
    m = mm.theorem2_min(args.N)
    b.add("theorem2", {"N": args.N, "min": m}, annotate=("min",))
    if args.N >= 4:
        b.check("theorem2", m == mm.LIMIT_D)
    K = mm.theorem3_search(args.N, args.eps, args.kmax)
    if K is None:
        b.add("theorem3", {"N": args.N, "eps": args.eps, "K": None,
                           "note": "not found: no window of this length stays above 1/5 - eps "
                                   "up to kmax"})
    else:
        prof = [[k, d] for k, d in zip(range(K, K + args.N + 1),
                                       mm.alpha1_distances(K + args.N, K))]
        b.add("theorem3", {"N": args.N, "eps": args.eps, "K": K, "window": prof})
    return b


def cmd_verify(args) -> ReportBundle:
    b = ReportBundle(f"verify --suite {args.suite}", digits=args.digits)
    return suites.run(args.suite, b, args.max)


def cmd_report(args) -> ReportBundle:
    b = ReportBundle("report", digits=args.digits)
    for name in ("table1", "thm2", "thm3", "thm4"):
        suites.run(name, b)
    b.add("dubickas", {"value": mm.dubickas_constant()}, annotate=("value",))
    return b


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=argparse.SUPPRESS,
                        help="significant digits of decimal annotations")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON lines instead of text")
    p = argparse.ArgumentParser(prog="fibmaxmin", description=__doc__.splitlines()[0],
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, helptext):
        return sub.add_parser(name, parents=[common], help=helptext)

    s = add("table1", "recompute the (x_N, d_N) table for N <= 18")
    s.set_defaults(func=cmd_table1)

    for name, func, helptext in (("envelope", cmd_envelope, "envelope record for a window"),
                                 ("dn", cmd_dn, "max-min value of a window")):
        s = add(name, helptext)
        s.add_argument("--from", dest="K", type=int, default=1)
        s.add_argument("--len", dest="N", type=int, required=True)
        if name == "envelope":
            s.add_argument("--svg", metavar="PATH")
        s.set_defaults(func=func)

    s = add("planar", "max over the unit square for G_1 = x, G_2 = y")
    s.add_argument("--n", dest="N", type=int, required=True)
    s.add_argument("--svg", metavar="PATH")
    s.set_defaults(func=cmd_planar)

    s = add("alpha1", "distances of F_n/(phi+2)")
    s.add_argument("--len", dest="N", type=int, required=True)
    s.add_argument("--eps", type=_rational, default=Fraction(1, 20))
    s.add_argument("--kmax", type=int, default=100)
    s.set_defaults(func=cmd_alpha1)

    s = add("verify", "run a verification suite")
    s.add_argument("--suite", choices=[*suites.SUITES, "all"], default="all")
    s.add_argument("--max", type=int, default=None, help="override the suite's range")
    s.set_defaults(func=cmd_verify)

    s = add("report", "combined report of the main results")
    s.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # actions are shared with the parent parser, so defaults are filled in here
    args.digits = getattr(args, "digits", DEFAULT_DIGITS)
    args.json = getattr(args, "json", False)
    try:
        bundle = args.func(args)
    except (DomainError, IndexRangeError) as exc:
        print(f"fibmaxmin: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"fibmaxmin: {exc}", file=sys.stderr)
        return EXIT_IO
    sys.stdout.write(bundle.to_jsonl() if args.json else bundle.to_text())
    return EXIT_OK if bundle.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
