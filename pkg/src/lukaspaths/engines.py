"""Query dispatch across the counting engines, the cross-engine agreement
sweep, and the b-file fixtures that pin the library against independently
generated sequence data.

The four engines are: the brute-force oracle (explicit generation), the
dynamic program, the closed-form binomials, and exact generating-function
expansion.  Not every engine covers every query; `EngineDomainError` marks
the queries an engine does not define (for example, closed forms for
height-bounded alternate paths).
"""
from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .alternate import alt_series
from .bounded import bounded_gf, total_bounded_gf
from .core import (
    DEFAULT_ORACLE_CAP,
    EndKind,
    InfiniteFamilyError,
    Orientation,
    PathQuery,
    dp_count,
    enumerate_count,
    enumerate_profile,
)
from .counts import prefix_count, prefix_series, suffix_count, suffix_series
from .series import Series, catalan, catalan_gf

ENGINES = ("oracle", "dp", "closed", "gf")


class EngineDomainError(ValueError):
    """The requested engine does not define this query."""


class BFileError(ValueError):
    """Unreadable or malformed b-file."""


def series_for_query(
    k: Optional[int],
    kind: EndKind = EndKind.ANY,
    orientation: Orientation = Orientation.L2R,
    bound: Optional[int] = None,
    alternate: bool = False,
    order: int = 16,
) -> Series:
    """The generating-function engine: exact series whose coefficient n
    counts the length-n paths of the query.  ``k is None`` sums over all end
    heights (kind must be Any)."""
    if k is None and kind is not EndKind.ANY:
        raise EngineDomainError("totals over end heights are defined for kind=any only")
    if k is None and bound is None and orientation is Orientation.L2R:
        raise InfiniteFamilyError(
            "infinite family: unbounded l2r totals over end heights"
        )
    if alternate:
        if orientation is not Orientation.L2R or bound is not None or k is None:
            raise EngineDomainError(
                "alternate paths have series only for unbounded l2r queries "
                "with a fixed end height; use the dp engine otherwise"
            )
        return alt_series(k, kind, order)
    if k is None:
        if bound is not None:
            return total_bounded_gf(bound, orientation).expand(order)
        return (catalan_gf(order + 1) - 1).shift_down(1)
    if bound is not None:
        return bounded_gf(bound, k, kind, orientation).expand(order)
    if orientation is Orientation.L2R:
        return prefix_series(k, kind, order)
    return suffix_series(k, kind, order)


def closed_count(
    n: int,
    k: Optional[int],
    kind: EndKind = EndKind.ANY,
    orientation: Orientation = Orientation.L2R,
    bound: Optional[int] = None,
    alternate: bool = False,
) -> int:
    """The closed-form binomial engine (unbounded, non-alternate queries)."""
    if alternate or bound is not None:
        raise EngineDomainError("closed forms cover unbounded non-alternate queries only")
    if k is None:
        if kind is not EndKind.ANY:
            raise EngineDomainError("totals over end heights are defined for kind=any only")
        if orientation is Orientation.R2L:
            return catalan(n + 1)
        raise InfiniteFamilyError("infinite family: unbounded l2r totals over end heights")
    if orientation is Orientation.L2R:
        return prefix_count(n, k, kind)
    return suffix_count(n, k, kind)


def count_by_engine(engine: str, query: PathQuery, oracle_cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Evaluate one query on one engine by name."""
    if engine == "oracle":
        return enumerate_count(query, cap=oracle_cap)
    if engine == "dp":
        return dp_count(query)
    if engine == "closed":
        return closed_count(
            query.n, query.k, query.kind, query.orientation, query.bound, query.alternate
        )
    if engine == "gf":
        series = series_for_query(
            query.k, query.kind, query.orientation, query.bound, query.alternate,
            order=query.n + 1,
        )
        value = series.integer_coefficients()[query.n]
        if query.n == 0 and query.k == 0 and query.kind is not EndKind.ANY:
            # the series families charge the empty path to the k = 0 up state;
            # query-level kind counts charge it to Any only
            value = 0
        return value
    raise ValueError(f"unknown engine {engine!r}")


def applicable_engines(query: PathQuery, oracle_cap: int = DEFAULT_ORACLE_CAP) -> list[str]:
    """The engines defined for this query (assuming it is a finite family)."""
    out = ["dp"]
    if query.n <= oracle_cap:
        out.insert(0, "oracle")
    if not query.alternate and query.bound is None:
        out.append("closed")
    gf_ok = (
        not query.alternate
        and (query.bound is not None or query.k is not None or query.orientation is Orientation.R2L)
    ) or (
        query.alternate
        and query.orientation is Orientation.L2R
        and query.bound is None
        and query.k is not None
    )
    if gf_ok:
        out.append("gf")
    return out


# ---------------------------------------------------------------------------
# cross-engine agreement sweep
# ---------------------------------------------------------------------------

_KINDS = (EndKind.ANY, EndKind.UP, EndKind.FLAT, EndKind.DOWN)


def cross_engine_grid(
    n_max: int = 9,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    per_query_oracle_n_max: int = 5,
) -> Optional[str]:
    """Exhaustive agreement sweep: for every (n <= n_max, k <= n, kind,
    orientation, bound in {none, 0..n}, alternate) compare the enumeration
    oracle, the dynamic program, and, where defined, the closed forms and the
    generating functions.

    One exhaustive generation pass per (n, orientation, alternate) buckets
    paths by (end height, end kind, max height), from which every bounded and
    per-kind oracle count is a partial sum.  The per-query oracle is run
    directly on the smaller lengths as well.

    Returns None when everything agrees, else a description of the first
    disagreement.
    """
    for n in range(0, n_max + 1):
        for orientation in (Orientation.L2R, Orientation.R2L):
            for alternate in (False, True):
                profile = enumerate_profile(n, orientation, alternate, cap=oracle_cap)
                by_pair: dict[tuple[int, EndKind], list[tuple[int, int]]] = {}
                for (h, kd, mh), c in profile.items():
                    by_pair.setdefault((h, kd), []).append((mh, c))

                def oracle_value(k: int, kind: EndKind, bound: Optional[int]) -> int:
                    total = 0
                    kinds = _KINDS[1:] if kind is EndKind.ANY else (kind,)
                    for kd in kinds:
                        for mh, c in by_pair.get((k, kd), ()):
                            if bound is None or mh <= bound:
                                total += c
                    if n == 0 and k == 0 and kind is EndKind.ANY:
                        total += 1
                    return total

                for k in range(0, n + 1):
                    for kind in _KINDS:
                        for bound in [None, *range(0, n + 1)]:
                            if bound is not None and k > bound:
                                continue
                            query = PathQuery(n, k, kind, orientation, bound, alternate)
                            got = {"dp": dp_count(query)}
                            got["census"] = oracle_value(k, kind, bound)
                            if n <= per_query_oracle_n_max:
                                got["oracle"] = enumerate_count(query, cap=oracle_cap)
                            for engine in ("closed", "gf"):
                                if engine in applicable_engines(query, oracle_cap):
                                    got[engine] = count_by_engine(engine, query, oracle_cap)
                            if len(set(got.values())) != 1:
                                return f"disagreement at {query}: {got}"
                # totals over end heights
                for bound in [None, *range(0, n + 1)]:
                    query = PathQuery(n, None, EndKind.ANY, orientation, bound, alternate)
                    if query.is_infinite():
                        continue
                    got = {"dp": dp_count(query)}
                    census = sum(
                        c for (h, kd, mh), c in profile.items()
                        if bound is None or mh <= bound
                    )
                    got["census"] = census + (1 if n == 0 else 0)
                    if n <= per_query_oracle_n_max:
                        got["oracle"] = enumerate_count(query, cap=oracle_cap)
                    for engine in ("closed", "gf"):
                        if engine in applicable_engines(query, oracle_cap):
                            got[engine] = count_by_engine(engine, query, oracle_cap)
                    if len(set(got.values())) != 1:
                        return f"disagreement at {query}: {got}"
    return None


# ---------------------------------------------------------------------------
# b-file fixtures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: OEIS-style 'index value' lines."""

    entries: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def read_bfile(path: str | Path) -> BFile:
    """Parse a b-file; blank lines and '#' comments are ignored, indices must
    be strictly increasing."""
    entries: list[tuple[int, int]] = []
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise BFileError(f"unreadable b-file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"malformed b-file line {lineno}: {raw!r}")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise BFileError(f"malformed b-file line {lineno}: {raw!r}") from exc
        if entries and idx <= entries[-1][0]:
            raise BFileError(f"b-file indices not strictly increasing at line {lineno}")
        entries.append((idx, val))
    return BFile(tuple(entries))


def bundled_bfile(name: str) -> Path:
    """Path of a fixture shipped with the package."""
    resource = importlib.resources.files("lukaspaths").joinpath("data", name)
    return Path(str(resource))


def compare_bfile(
    bfile: BFile,
    computed: list[int],
    shift: int = 0,
    start: int = 0,
) -> tuple[int, list[tuple[int, int, int]]]:
    """Compare computed[i] against the b-file value at index i - shift for
    every i >= start where both sides exist.  Returns (comparisons,
    mismatches) with mismatches as (index, computed, fixture) triples."""
    table = bfile.as_dict()
    comparisons = 0
    mismatches: list[tuple[int, int, int]] = []
    for i in range(start, len(computed)):
        j = i - shift
        if j not in table:
            continue
        comparisons += 1
        if computed[i] != table[j]:
            mismatches.append((i, computed[i], table[j]))
    return comparisons, mismatches


#: Bundled fixture checks: (fixture, query kwargs, shift, start).  Each
#: fixture is generated by an independent formula or a tiny standalone
#: dynamic program (see tools/gen_bfiles.py), so agreement here pins the
#: library against data it did not produce.
FIXTURE_CHECKS: tuple[tuple[str, dict, int, int], ...] = (
    ("b000108.txt", dict(k=0), 0, 0),
    ("b000245.txt", dict(k=1), 0, 0),
    ("b002057.txt", dict(k=2), 1, 0),
    ("b000344.txt", dict(k=3), 1, 0),
    ("b000108.txt", dict(k=1, orientation=Orientation.R2L), 0, 1),
    ("b000245.txt", dict(k=2, orientation=Orientation.R2L), 1, 0),
    ("b002057.txt", dict(k=3, orientation=Orientation.R2L), 3, 0),
    ("b001519.txt", dict(k=2, kind=EndKind.UP, bound=2), 0, 1),
    ("b007051.txt", dict(k=2, kind=EndKind.UP, bound=3), 1, 0),
    ("b080937.txt", dict(k=2, kind=EndKind.UP, bound=4), 0, 1),
    ("b000012.txt", dict(k=None, bound=0), 0, 0),
    ("b000079.txt", dict(k=None, bound=1), 0, 0),
    ("b001906.txt", dict(k=None, bound=2), -1, 0),
    ("b003462.txt", dict(k=None, bound=3), -1, 0),
    ("b005021.txt", dict(k=None, bound=4), 0, 0),
    ("b000012.txt", dict(k=None, bound=0, orientation=Orientation.R2L), 0, 0),
    ("b000079.txt", dict(k=None, bound=1, orientation=Orientation.R2L), 0, 0),
    ("b001519.txt", dict(k=None, bound=2, orientation=Orientation.R2L), -1, 0),
    ("b007051.txt", dict(k=None, bound=3, orientation=Orientation.R2L), 0, 0),
)


def run_fixture_checks(order: int = 21) -> list[tuple[str, int, int]]:
    """Compare the bundled fixtures against the series engine.  Returns
    (fixture name, comparisons, mismatches) per check."""
    results = []
    for name, kwargs, shift, start in FIXTURE_CHECKS:
        series = series_for_query(order=order, **kwargs)
        computed = series.integer_coefficients()
        bfile = read_bfile(bundled_bfile(name))
        ncomp, mismatches = compare_bfile(bfile, computed, shift, start)
        results.append((name, ncomp, len(mismatches)))
    return results
