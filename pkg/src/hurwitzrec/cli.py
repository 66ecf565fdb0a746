"""Command-line interface.

Subcommands: ``table`` (Hurwitz numbers by either or both routes), ``wkg``
(canonical JSON of one correlation form), ``check`` (verification suites).

Exit codes: 0 success, 2 mathematical mismatch, 64 bad flags, 65 request
out of range.  Stdout carries data; stderr carries diagnostics.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bridge import elsv_consistency, times_by_recursion, times_from_curve
from .cache import attach_cache
from .extract import h_series, extract_hurwitz, verify_bm
from .partitions import HurwitzOracle, partitions_of
from .poleform import format_rational
from .selfcheck import run_series_checks
from .toprec import LambertEngine, is_stable, required_order

EX_OK = 0
EX_MISMATCH = 2
EX_USAGE = 64
EX_RANGE = 65

CACHE_ENV = "HURWITZREC_CACHE"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    parser = _Parser(prog="hurwitzrec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--trunc-order", type=int, default=None,
                       help="series truncation order (only raising the default is allowed)")
        p.add_argument("--cache", default=None, help="path to the PoleForm cache file")
        p.add_argument("--verbose", action="store_true")

    p_table = sub.add_parser("table", help="emit H_{g,mu} for a range")
    p_table.add_argument("--g-max", type=int, default=1)
    p_table.add_argument("--n-max", type=int, default=4)
    p_table.add_argument("--method", choices=("recursion", "oracle", "both"), default="both")
    p_table.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    common(p_table)

    p_wkg = sub.add_parser("wkg", help="canonical JSON of one correlation form")
    p_wkg.add_argument("g", type=int)
    p_wkg.add_argument("k", type=int)
    common(p_wkg)

    p_check = sub.add_parser("check", help="run a verification suite")
    p_check.add_argument("suite", choices=("bm", "elsv", "times", "series"))
    p_check.add_argument("--g-max", type=int, default=1)
    p_check.add_argument("--n-max", type=int, default=4)
    common(p_check)

    return parser


def _resolve_trunc(args, default):
    if args.trunc_order is None:
        return default
    if args.trunc_order < default:
        raise _UsageError(
            f"--trunc-order may only raise the default bound {default}"
        )
    return args.trunc_order


def _cache_path(args):
    return args.cache or os.environ.get(CACHE_ENV)


def _make_engine(args, order, verbose=False):
    engine = LambertEngine(order=order)
    flush = None
    path = _cache_path(args)
    if path:
        flush = attach_cache(engine, path)
        if verbose:
            print(f"cache attached at {path}", file=sys.stderr)
    return engine, flush


def _cmd_table(args):
    if args.g_max < 0 or args.n_max < 1:
        raise _UsageError("need --g-max >= 0 and --n-max >= 1")
    need_recursion = args.method in ("recursion", "both")
    need_oracle = args.method in ("oracle", "both")
    engine = flush = oracle = None
    if need_recursion:
        order = _resolve_trunc(args, required_order(args.g_max, args.n_max))
        engine, flush = _make_engine(args, order, args.verbose)
    if need_oracle:
        oracle = HurwitzOracle(args.n_max, args.g_max)

    rows = []
    mismatch = False
    hs_cache = {}
    for g in range(args.g_max + 1):
        for n in range(1, args.n_max + 1):
            for mu in partitions_of(n):
                stable = is_stable(g, len(mu))
                if need_recursion and not stable:
                    continue
                row = {"g": g, "mu": list(mu)}
                if need_recursion:
                    key = (g, len(mu))
                    hs = hs_cache.get(key)
                    if hs is None:
                        hs = h_series(engine.w(*key), args.n_max)
                        hs_cache[key] = hs
                    row["recursion"] = format_rational(extract_hurwitz(hs, g, mu))
                if need_oracle:
                    row["oracle"] = format_rational(oracle.hurwitz(g, mu))
                if args.method == "both":
                    row["equal"] = row["recursion"] == row["oracle"]
                    mismatch = mismatch or not row["equal"]
                rows.append(row)
    if flush:
        flush()
    _emit_table(rows, args)
    return EX_MISMATCH if mismatch else EX_OK


def _emit_table(rows, args):
    if args.fmt == "json":
        print(json.dumps(rows, separators=(", ", ": ")))
        return
    if args.fmt == "csv":
        print("g,mu,method,value")
        for row in rows:
            mu = ";".join(str(x) for x in row["mu"])
            for method in ("recursion", "oracle"):
                if method in row:
                    print(f"{row['g']},{mu},{method},{row[method]}")
        return
    header = f"{'g':>2}  {'mu':<14}"
    if any("recursion" in r for r in rows):
        header += f" {'recursion':>16}"
    if any("oracle" in r for r in rows):
        header += f" {'oracle':>16}"
    if args.method == "both":
        header += "  equal"
    print(header)
    for row in rows:
        mu = "(" + ",".join(str(x) for x in row["mu"]) + ")"
        line = f"{row['g']:>2}  {mu:<14}"
        if "recursion" in row:
            line += f" {row['recursion']:>16}"
        if "oracle" in row:
            line += f" {row['oracle']:>16}"
        if args.method == "both":
            line += "  " + ("yes" if row["equal"] else "NO")
        print(line)


def _cmd_wkg(args):
    if args.g < 0 or args.k < 1 or 2 * args.g - 2 + args.k <= 0:
        # let the engine compose the explanatory message
        try:
            LambertEngine(order=8).w(args.g, args.k)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EX_RANGE
    order = _resolve_trunc(args, required_order(args.g, args.k))
    engine, flush = _make_engine(args, order, args.verbose)
    form = engine.w(args.g, args.k)
    if flush:
        flush()
    print(form.canonical_json())
    return EX_OK


def _cmd_check(args):
    if args.suite == "bm":
        if args.g_max < 0 or args.n_max < 1:
            raise _UsageError("need --g-max >= 0 and --n-max >= 1")
        order = _resolve_trunc(args, required_order(args.g_max, args.n_max))
        engine, flush = _make_engine(args, order, args.verbose)
        report = verify_bm(args.g_max, args.n_max, engine=engine)
        if flush:
            flush()
        print(report.to_text())
        return EX_OK if report.ok else EX_MISMATCH

    if args.suite == "elsv":
        report = elsv_consistency()
        print(report.to_text())
        return EX_OK if report.ok else EX_MISMATCH

    if args.suite == "times":
        t_max = 20
        from_curve = times_from_curve(t_max)
        from_recursion = times_by_recursion(t_max)
        ok = True
        for m, v in from_curve.items():
            w = from_recursion[m]
            match = v == w
            ok = ok and match
            print(
                f"t_{m} = {format_rational(v)}"
                + ("" if match else f"  RECURSION DISAGREES: {format_rational(w)}")
            )
        print("times: dual routes agree" if ok else "times: MISMATCH")
        return EX_OK if ok else EX_MISMATCH

    results = run_series_checks()
    ok = True
    for name, passed, detail in results:
        ok = ok and passed
        print(f"{'ok' if passed else 'FAIL'}  {name}" + (f": {detail}" if detail else ""))
    return EX_OK if ok else EX_MISMATCH


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    try:
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "wkg":
            return _cmd_wkg(args)
        return _cmd_check(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_RANGE


if __name__ == "__main__":
    sys.exit(main())
