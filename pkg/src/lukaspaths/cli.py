"""Command-line surface: count, series, check, height, selftest.

Counts are always serialized as decimal strings so arbitrary precision
survives any consumer; output is deterministic byte-for-byte for identical
flags.  Every error path has its own exit code (see EXIT_* and --help).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .asymptotics import FAMILIES, avg_height
from .core import (
    DEFAULT_ORACLE_CAP,
    EndKind,
    InfiniteFamilyError,
    OracleCapError,
    Orientation,
    PathQuery,
)
from .engines import (
    BFileError,
    EngineDomainError,
    applicable_engines,
    compare_bfile,
    count_by_engine,
    cross_engine_grid,
    read_bfile,
    run_fixture_checks,
    series_for_query,
)
from .series import DEFAULT_ORDER

EXIT_OK = 0
EXIT_USAGE = 2          # argparse errors
EXIT_INFINITE = 3       # infinite-family queries
EXIT_ORACLE_CAP = 4     # oracle asked beyond its cap
EXIT_DISAGREE = 5       # engine disagreement, selftest or check failure
EXIT_BFILE = 6          # unreadable or malformed b-file
EXIT_DOMAIN = 7         # query outside an engine's or family's domain

_EPILOG = """\
exit codes:
  0  success
  2  usage error
  3  infinite family (unbounded left-to-right query with no end height)
  4  oracle cap exceeded
  5  engine disagreement / failed selftest or check
  6  unreadable or malformed b-file
  7  query outside the requested engine's or family's domain

environment:
  LUKAS_ORDER  default truncation order for series output (default 64)
"""


def _default_order() -> int:
    raw = os.environ.get("LUKAS_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"error: LUKAS_ORDER must be an integer, got {raw!r}")
    if value < 1:
        raise SystemExit("error: LUKAS_ORDER must be positive")
    return value


def _add_query_flags(p: argparse.ArgumentParser, with_total: bool = True) -> None:
    p.add_argument("--k", type=int, default=None, help="end height")
    if with_total:
        p.add_argument(
            "--total", action="store_true",
            help="sum over all end heights (instead of --k)",
        )
    p.add_argument(
        "--kind", choices=[k.value for k in EndKind], default="any",
        help="final-step kind filter (default any)",
    )
    p.add_argument(
        "--orientation", choices=[o.value for o in Orientation], default="l2r",
        help="path model (default l2r)",
    )
    p.add_argument("--bound", type=int, default=None, help="maximum height t")
    p.add_argument(
        "--alternate", action="store_true",
        help="restrict to paths with no two consecutive same-direction steps",
    )


def _query_fields(args: argparse.Namespace) -> dict:
    k = args.k
    if getattr(args, "total", False):
        if args.k is not None:
            raise EngineDomainError("--total and --k are mutually exclusive")
        k = None
    return dict(
        k=k,
        kind=EndKind(args.kind),
        orientation=Orientation(args.orientation),
        bound=args.bound,
        alternate=args.alternate,
    )


def _query_echo(fields: dict, n: Optional[int] = None, total: Optional[bool] = None) -> dict:
    echo = {}
    if n is not None:
        echo["n"] = n
    echo.update(
        k=fields["k"],
        kind=fields["kind"].value,
        orientation=fields["orientation"].value,
        bound=fields["bound"],
        alternate=fields["alternate"],
    )
    if total is not None:
        echo["total"] = total
    return echo


def _emit_record(query: dict, engine: str, values: list[int], meta: dict, fmt: str) -> None:
    if fmt == "json":
        record = {
            "query": query,
            "engine": engine,
            "values": [str(v) for v in values],
            "meta": meta,
        }
        print(json.dumps(record))
    elif fmt == "csv":
        print("index,value")
        for i, v in enumerate(values):
            print(f"{i},{v}")
    else:
        print(",".join(str(v) for v in values))


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------


def cmd_count(args: argparse.Namespace) -> int:
    fields = _query_fields(args)
    query = PathQuery(n=args.n, **fields)
    if query.is_infinite():
        raise InfiniteFamilyError(
            "infinite family: unbounded l2r query with no end height"
        )
    if args.engine == "all":
        engines = applicable_engines(query, args.oracle_cap)
        results = {e: count_by_engine(e, query, args.oracle_cap) for e in engines}
        if len(set(results.values())) != 1:
            print(f"error: engine disagreement at {query}: {results}", file=sys.stderr)
            return EXIT_DISAGREE
        value = results[engines[0]]
        used = engines
    else:
        value = count_by_engine(args.engine, query, args.oracle_cap)
        used = [args.engine]
    meta = {"engines": used, "oracle_cap": args.oracle_cap, "order": None, "precision": None}
    _emit_record(
        _query_echo(fields, n=args.n, total=args.total),
        args.engine,
        [value],
        meta,
        args.format,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------


def _series_values(args: argparse.Namespace, order: int) -> list[int]:
    fields = _query_fields(args)
    if fields["k"] is None and not getattr(args, "total", False):
        raise EngineDomainError("series needs --k or --total")
    series = series_for_query(order=order, **fields)
    return series.integer_coefficients()


def cmd_series(args: argparse.Namespace) -> int:
    order = args.order if args.order is not None else _default_order()
    values = _series_values(args, order)
    fields = _query_fields(args)
    meta = {"engines": ["gf"], "oracle_cap": None, "order": order, "precision": None}
    _emit_record(
        _query_echo(fields, total=args.total),
        "gf",
        values,
        meta,
        args.format,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    order = args.order if args.order is not None else _default_order()
    bfile = read_bfile(args.bfile)
    values = _series_values(args, order)
    ncomp, mismatches = compare_bfile(bfile, values, shift=args.shift, start=args.start)
    for i, got, want in mismatches:
        print(f"index {i}: computed {got} != fixture {want}")
    print(f"{ncomp} comparisons, {len(mismatches)} mismatches")
    return EXIT_OK if not mismatches else EXIT_DISAGREE


# ---------------------------------------------------------------------------
# height
# ---------------------------------------------------------------------------


def cmd_height(args: argparse.Namespace) -> int:
    try:
        n_list = [int(part) for part in args.n_list.split(",") if part]
    except ValueError:
        raise EngineDomainError(f"bad --n-list {args.n_list!r}")
    stats = [
        avg_height(n, args.family, k=args.k, route=args.route) for n in n_list
    ]
    if args.format == "json":
        record = {
            "family": args.family,
            "k": args.k,
            "route": args.route,
            "stats": [
                {
                    "n": st.n,
                    "mean": str(st.mean_height),
                    "sqrt_pi_n": round(st.sqrt_pi_n, args.precision),
                    "ratio": round(st.ratio, args.precision),
                }
                for st in stats
            ],
        }
        print(json.dumps(record))
    else:
        print(f"family {args.family}" + (f" (k={args.k})" if args.k is not None else ""))
        print("n mean sqrt_pi_n ratio")
        for st in stats:
            print(
                f"{st.n} {st.mean_height} "
                f"{st.sqrt_pi_n:.{args.precision}f} {st.ratio:.{args.precision}f}"
            )
    return EXIT_OK


# ---------------------------------------------------------------------------
# selftest
# ---------------------------------------------------------------------------


def cmd_selftest(args: argparse.Namespace) -> int:
    n_max = 6 if args.quick else 9
    print(f"cross-engine grid (n <= {n_max}) ...")
    failure = cross_engine_grid(n_max=n_max)
    if failure is not None:
        print(f"FAIL: {failure}")
        return EXIT_DISAGREE
    print("cross-engine grid: ok")
    print("fixture comparisons ...")
    ok = True
    for name, ncomp, nmiss in run_fixture_checks():
        status = "ok" if nmiss == 0 else "FAIL"
        if nmiss:
            ok = False
        print(f"  {name}: {ncomp} comparisons, {nmiss} mismatches [{status}]")
    if not ok:
        return EXIT_DISAGREE
    print("selftest: all checks passed")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lukas",
        description="Exact counting of Lukasiewicz lattice path prefixes and suffixes.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count paths matching a query")
    p_count.add_argument("--n", type=int, required=True, help="path length")
    _add_query_flags(p_count)
    p_count.add_argument(
        "--engine", choices=["oracle", "dp", "closed", "gf", "all"], default="all",
        help="counting engine; 'all' asserts agreement (default)",
    )
    p_count.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    p_count.add_argument("--format", choices=["json", "text"], default="text")
    p_count.set_defaults(func=cmd_count)

    p_series = sub.add_parser("series", help="series coefficients of a query")
    _add_query_flags(p_series)
    p_series.add_argument("--order", type=int, default=None, help="truncation order")
    p_series.add_argument("--format", choices=["json", "csv", "text"], default="text")
    p_series.set_defaults(func=cmd_series)

    p_check = sub.add_parser("check", help="diff a computed series against a b-file")
    p_check.add_argument("--bfile", required=True, help="path to the b-file")
    p_check.add_argument("--shift", type=int, default=0,
                         help="computed[i] is compared to fixture[i - shift]")
    p_check.add_argument("--start", type=int, default=0,
                         help="first computed index to compare")
    _add_query_flags(p_check)
    p_check.add_argument("--order", type=int, default=None)
    p_check.set_defaults(func=cmd_check)

    p_height = sub.add_parser("height", help="exact average heights vs sqrt(pi n)")
    p_height.add_argument("--family", choices=list(FAMILIES), required=True)
    p_height.add_argument("--k", type=int, default=None, help="end height for *-at-k families")
    p_height.add_argument("--n-list", required=True, help="comma-separated lengths")
    p_height.add_argument("--route", choices=["gf", "dp"], default="gf")
    p_height.add_argument("--precision", type=int, default=6)
    p_height.add_argument("--format", choices=["json", "text"], default="text")
    p_height.set_defaults(func=cmd_height)

    p_self = sub.add_parser("selftest", help="cross-engine grid and fixture comparisons")
    p_self.add_argument("--quick", action="store_true", help="limit the grid to n <= 6")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InfiniteFamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFINITE
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_CAP
    except BFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BFILE
    except (EngineDomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
