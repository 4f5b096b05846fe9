"""Command-line front end.

Exit codes: 0 success, 1 a violation or finding was reported, 2 usage or
input error. JSON goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import cyclo, harness
from .delta import delta, parse_vector, s_element
from .errors import FibSpecialError
from .fibparts import PartitionStats, phi, phi_window, r_counts
from .intpoly import IntPoly, from_json, from_text
from .series import chi_series, chi_window

EXIT_OK, EXIT_FINDING, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_window(text: str) -> tuple[int, int]:
    try:
        a, b = (int(p) for p in text.split(":"))
    except ValueError:
        raise UsageError(f"malformed window {text!r}; expected a:b") from None
    if not 1 <= a <= b:
        raise UsageError(f"window needs 1 <= a <= b, got {text!r}")
    return a, b


def parse_poly(text: str) -> IntPoly:
    try:
        return from_json(text) if text.lstrip().startswith("[") else from_text(text)
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed polynomial {text!r}: {exc}") from None


def _poly_dict(g: IntPoly) -> dict:
    return {"coeffs": list(g.coeffs), "text": g.to_text()}


def _emit(obj) -> None:
    print(json.dumps(obj))


def _emit_csv(header, rows) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def cmd_phi(args) -> int:
    if args.window:
        a, b = parse_window(args.window)
        g, window = phi_window(args.n, a, b), [a, b]
    else:
        g, window = phi(args.n), None
    _emit({"n": args.n, "window": window, **_poly_dict(g)})
    return EXIT_OK


def cmd_delta(args) -> int:
    A = parse_vector(args.vector)
    _emit({"A": list(A), **_poly_dict(delta(A)), "s": s_element(A).to_dict()})
    return EXIT_OK


def cmd_reduce(args) -> int:
    if args.poly is not None:
        g = parse_poly(args.poly)
    elif args.vector is not None:
        g = delta(parse_vector(args.vector))
    else:
        raise UsageError("reduce needs a Delta-vector or --poly")
    _emit({"poly": list(g.coeffs), "image": cyclo.reduce(g, args.d).to_dict()})
    return EXIT_OK


def cmd_special(args) -> int:
    g = parse_poly(args.poly)
    image = cyclo.reduce(g, 3)
    verdict = cyclo.is_special(image)
    _emit({"poly": list(g.coeffs), "image": image.to_dict(),
           "is_special": verdict.is_special, "reason": verdict.reason})
    return EXIT_OK


def cmd_s(args) -> int:
    A = parse_vector(args.vector)
    s = s_element(A)
    _emit({"A": list(A), "s": s.to_dict(), "in_M": cyclo.in_M(s)})
    return EXIT_OK


def cmd_rcounts(args) -> int:
    window = parse_window(args.window) if args.window else None
    last = args.to if args.to is not None else args.n
    if last < args.n:
        raise UsageError("--to must be >= N")
    stats = [r_counts(n, args.d, window) for n in range(args.n, last + 1)]
    if args.csv:
        _emit_csv(PartitionStats.csv_header(args.d), [s.csv_row() for s in stats])
    else:
        for s in stats:
            _emit(s.to_dict())
    return EXIT_OK


def cmd_chi(args) -> int:
    series = chi_series(args.upto)
    if args.csv:
        _emit_csv(["n", "chi"], list(enumerate(series.tolist())))
    else:
        _emit({"upto": args.upto, "coeffs": series.tolist(), "max_abs_coeff": series.max_abs()})
    return EXIT_FINDING if series.violations() else EXIT_OK


def cmd_chiwindow(args) -> int:
    a, b = parse_window(args.window)
    s = chi_window(a, b)
    bad = s.violations()
    _emit({"a": a, "b": b, "coeffs": s.tolist(), "max_abs_coeff": s.max_abs(),
           "witness": {"n": bad[0][0], "coeff": bad[0][1]} if bad else None})
    return EXIT_FINDING if bad else EXIT_OK


def cmd_verify(args) -> int:
    common = {"witness_cap": args.witness_cap}
    pooled = {**common, "workers": getattr(args, "workers", None)}
    suite = args.suite
    if suite == "theorem1":
        report = harness.verify_theorem1(args.max_m, args.mode, entry_bound=args.entry_bound,
                                         trials=args.trials, seed=args.seed, **pooled)
    elif suite == "lemma4":
        report = harness.verify_lemma4(args.trials, args.max_m, args.entry_bound, seed=args.seed, **pooled)
    elif suite == "theorem2":
        report = harness.verify_theorem2(args.lo, args.hi, **pooled)
    elif suite == "hypothesis1":
        report = harness.verify_hypothesis1(args.a_max, args.b_max, **pooled)
    elif suite == "hypothesis3":
        report = harness.verify_hypothesis3(args.d, args.hi, **pooled)
    elif suite == "oracles":
        report = harness.verify_oracles(args.n_cap, args.m_cap, entry_cap=args.entry_cap,
                                        s_m_cap=args.s_m_cap, **common)
    elif suite == "identity":
        report = harness.verify_identity(args.hi, args.cross, **common)
    elif suite == "zhao":
        report = harness.verify_zhao(args.b_max, **common)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown suite {suite}")
    print(report.to_json(timing=not args.no_timing))
    return EXIT_OK if report.ok else EXIT_FINDING


def cmd_explore(args) -> int:
    if args.d < 4:
        raise UsageError("explore hypothesis2 needs --d >= 4")
    records = harness.spread_curve(args.d, args.upto) if args.curve else [harness.explore_hypothesis2(args.d, args.upto)]
    if args.csv:
        _emit_csv(harness.SpreadRecord.CSV_HEADER, [r.csv_row() for r in records])
    elif args.curve:
        _emit([r.to_dict() for r in records])
    else:
        _emit(records[0].to_dict())
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibspecial",
        description="Fibonacci partitions, tridiagonal Delta polynomials and residue-class sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("phi", help="generating polynomial of Fibonacci partitions of N")
    p.add_argument("n", type=_positive, metavar="N")
    p.add_argument("--window", metavar="a:b", help="restrict parts to f_a..f_b")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("delta", help="Delta(A;t) for a comma-separated vector (\"\" is empty)")
    p.add_argument("vector", metavar="A")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("reduce", help="residue-class sums of Delta(A;t) or of --poly modulo --d")
    p.add_argument("vector", nargs="?", metavar="A")
    p.add_argument("--poly", metavar="P", help="JSON array or text such as 't + t^2'")
    p.add_argument("--d", type=int, default=3)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("special", help="3-special test for a polynomial")
    p.add_argument("--poly", required=True, metavar="P")
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("s", help="S(A) = R(Delta(A)) * (T - 1) in K_3")
    p.add_argument("vector", metavar="A")
    p.set_defaults(func=cmd_s)

    p = sub.add_parser("rcounts", help="r_{d,i}(N) counts")
    p.add_argument("n", type=_positive, metavar="N")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--window", metavar="a:b")
    p.add_argument("--to", type=_positive, help="emit one record per n in N..TO")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_rcounts)

    p = sub.add_parser("chi", help="coefficients of prod (1 - x^{f_i}) through degree N")
    p.add_argument("--upto", type=_positive, required=True, metavar="N")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("chiwindow", help="prod_{a<=i<=b} (1 - x^{f_i})")
    p.add_argument("window", metavar="a:b")
    p.set_defaults(func=cmd_chiwindow)

    report_opts = argparse.ArgumentParser(add_help=False)
    report_opts.add_argument("--witness-cap", type=int, default=harness.DEFAULT_WITNESS_CAP)
    report_opts.add_argument("--no-timing", action="store_true", help="print duration_ms as null")
    pool_opts = argparse.ArgumentParser(add_help=False)
    pool_opts.add_argument("--workers", type=_positive, default=None,
                           help="process pool size (default: CPU count); output is unaffected")
    seed_opts = argparse.ArgumentParser(add_help=False)
    seed_opts.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)

    p = sub.add_parser("verify", help="run a verification suite")
    suites = p.add_subparsers(dest="suite", required=True, metavar="SUITE")

    s = suites.add_parser("theorem1", parents=[report_opts, pool_opts, seed_opts])
    s.add_argument("--max-m", type=_positive, default=9)
    s.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    s.add_argument("--entry-bound", type=int, default=30)
    s.add_argument("--trials", type=_positive, default=10_000)

    s = suites.add_parser("lemma4", parents=[report_opts, pool_opts, seed_opts])
    s.add_argument("--trials", type=_positive, default=10_000)
    s.add_argument("--max-m", type=_positive, default=8)
    s.add_argument("--entry-bound", type=int, default=30)

    s = suites.add_parser("theorem2", parents=[report_opts, pool_opts])
    s.add_argument("--from", dest="lo", type=_positive, default=1)
    s.add_argument("--to", dest="hi", type=_positive, default=1000)

    s = suites.add_parser("hypothesis1", parents=[report_opts, pool_opts])
    s.add_argument("--a-max", type=_positive, default=12)
    s.add_argument("--b-max", type=_positive, default=12)

    s = suites.add_parser("hypothesis3", parents=[report_opts, pool_opts])
    s.add_argument("--d", type=int, default=3)
    s.add_argument("--to", dest="hi", type=_positive, default=10_000)

    s = suites.add_parser("oracles", parents=[report_opts])
    s.add_argument("--n-cap", type=_positive, default=500)
    s.add_argument("--m-cap", type=_positive, default=6)
    s.add_argument("--entry-cap", type=int, default=4)
    s.add_argument("--s-m-cap", type=_positive, default=9)

    s = suites.add_parser("identity", parents=[report_opts])
    s.add_argument("--to", dest="hi", type=_positive, default=100_000)
    s.add_argument("--cross", type=_positive, default=10_000)

    s = suites.add_parser("zhao", parents=[report_opts])
    s.add_argument("--b-max", type=_positive, default=20)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore", help="explore a conjecture")
    targets = p.add_subparsers(dest="target", required=True, metavar="TARGET")
    s = targets.add_parser("hypothesis2", help="max spread of r_{d,i}(n) over n <= N")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--upto", type=_positive, required=True, metavar="N")
    s.add_argument("--curve", action="store_true", help="report at n_max = 10, 100, ..., N")
    s.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_explore)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FibSpecialError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
