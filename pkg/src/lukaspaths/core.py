"""Path model, validation, the brute-force enumeration oracle, and the
dynamic-programming counter that every other engine is checked against.

Left-to-right paths live in N^2, start at the origin, and use steps (1, r)
with r >= -1: up-steps of any positive rise, flat steps, and unit down-steps.
The right-to-left (suffix) model mirrors the step set: rises are at most +1
and falls may have any size.  An "alternate" path never takes two consecutive
steps of the same direction class (up/flat/down), whatever the rise sizes.

All counts are exact Python ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

DEFAULT_ORACLE_CAP = 10


class Orientation(Enum):
    L2R = "l2r"
    R2L = "r2l"


class EndKind(Enum):
    UP = "up"
    FLAT = "flat"
    DOWN = "down"
    ANY = "any"


STEP_KINDS = (EndKind.UP, EndKind.FLAT, EndKind.DOWN)


class InfiniteFamilyError(ValueError):
    """Raised for queries whose answer is not a finite number (left-to-right
    paths with neither an end height nor a height bound)."""


class OracleCapError(ValueError):
    """Raised when the brute-force oracle is asked for a length above its cap."""


@dataclass(frozen=True)
class Step:
    """A single lattice step (1, rise)."""

    rise: int

    @property
    def kind(self) -> EndKind:
        if self.rise > 0:
            return EndKind.UP
        if self.rise < 0:
            return EndKind.DOWN
        return EndKind.FLAT

    @staticmethod
    def up(j: int = 1) -> "Step":
        if j < 1:
            raise ValueError("up-steps need a positive rise")
        return Step(j)

    @staticmethod
    def flat() -> "Step":
        return Step(0)

    @staticmethod
    def down(j: int = 1) -> "Step":
        if j < 1:
            raise ValueError("down-steps need a positive fall")
        return Step(-j)


@dataclass(frozen=True)
class Path:
    """A finite step sequence with its reading orientation."""

    steps: tuple[Step, ...]
    orientation: Orientation = Orientation.L2R

    def __init__(self, steps: Iterable[Step], orientation: Orientation = Orientation.L2R):
        object.__setattr__(self, "steps", tuple(steps))
        object.__setattr__(self, "orientation", orientation)

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        """Partial height sums after each step."""
        out, h = [], 0
        for s in self.steps:
            h += s.rise
            out.append(h)
        return out


def validate(path: Path) -> bool:
    """True iff all partial heights stay >= 0 and every step belongs to the
    orientation's step set."""
    h = 0
    for s in path.steps:
        if path.orientation is Orientation.L2R:
            if s.rise < -1:
                return False
        else:
            if s.rise > 1:
                return False
        h += s.rise
        if h < 0:
            return False
    return True


def max_height(path: Path) -> int:
    """Maximum partial height reached (0 for the empty path)."""
    if not validate(path):
        raise ValueError("invalid path")
    top, h = 0, 0
    for s in path.steps:
        h += s.rise
        if h > top:
            top = h
    return top


def is_alternate(path: Path) -> bool:
    """True iff no two consecutive steps share a direction class."""
    prev: Optional[EndKind] = None
    for s in path.steps:
        k = s.kind
        if k is prev:
            return False
        prev = k
    return True


@dataclass(frozen=True)
class PathQuery:
    """The universal counting request.

    ``k is None`` means "any end height"; that is only a finite family for
    right-to-left paths or height-bounded left-to-right paths.
    """

    n: int
    k: Optional[int] = None
    kind: EndKind = EndKind.ANY
    orientation: Orientation = Orientation.L2R
    bound: Optional[int] = None
    alternate: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("length must be nonnegative")
        if self.k is not None and self.k < 0:
            raise ValueError("end height must be nonnegative")
        if self.bound is not None and self.bound < 0:
            raise ValueError("bound must be nonnegative")
        if self.k is not None and self.bound is not None and self.k > self.bound:
            raise ValueError("end height exceeds the height bound")

    def is_infinite(self) -> bool:
        return (
            self.orientation is Orientation.L2R
            and self.k is None
            and self.bound is None
        )


# step-class indices used by the counting engines
_UP, _FLAT, _DOWN, _START = 0, 1, 2, 3


def _kind_index(kind: EndKind) -> int:
    return {EndKind.UP: _UP, EndKind.FLAT: _FLAT, EndKind.DOWN: _DOWN}[kind]


def enumerate_count(query: PathQuery, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Brute-force oracle: count by explicit recursive generation.

    Up-step sizes are pruned to those that keep the target end height (or the
    bound) reachable, which makes the infinite step alphabet finite for every
    admissible query.
    """
    if query.n > cap:
        raise OracleCapError(f"oracle cap exceeded: n={query.n} > {cap}")
    if query.is_infinite():
        raise InfiniteFamilyError("infinite family: unbounded l2r query with no end height")

    n, k, bound = query.n, query.k, query.bound
    l2r = query.orientation is Orientation.L2R
    alternate = query.alternate
    want_kind = query.kind

    if n == 0:
        return 1 if want_kind is EndKind.ANY and k in (0, None) else 0

    count = 0

    def walk(i: int, h: int, last: int) -> None:
        nonlocal count
        if i == n:
            if (k is None or h == k) and (
                want_kind is EndKind.ANY or _kind_index(want_kind) == last
            ):
                count += 1
            return
        rem = n - i - 1  # steps remaining after the one taken now
        if l2r:
            if not (alternate and last == _UP):
                jmax_parts = []
                if bound is not None:
                    jmax_parts.append(bound - h)
                if k is not None:
                    jmax_parts.append(k + rem - h)
                jmax = min(jmax_parts)
                for j in range(1, jmax + 1):
                    walk(i + 1, h + j, _UP)
            if not (alternate and last == _FLAT):
                if k is None or h <= k + rem:
                    walk(i + 1, h, _FLAT)
            if h >= 1 and not (alternate and last == _DOWN):
                walk(i + 1, h - 1, _DOWN)
        else:
            if not (alternate and last == _UP):
                ok = bound is None or h + 1 <= bound
                if ok and (k is None or k <= h + 1 + rem):
                    walk(i + 1, h + 1, _UP)
            if not (alternate and last == _FLAT):
                if k is None or k <= h + rem:
                    walk(i + 1, h, _FLAT)
            if h >= 1 and not (alternate and last == _DOWN):
                jmax = h if k is None else min(h, h + rem - k)
                for j in range(1, jmax + 1):
                    walk(i + 1, h - j, _DOWN)

    walk(0, 0, _START)
    return count


def enumerate_profile(
    n: int,
    orientation: Orientation = Orientation.L2R,
    alternate: bool = False,
    cap: int = DEFAULT_ORACLE_CAP,
) -> dict[tuple[int, EndKind, int], int]:
    """Batch oracle: one exhaustive generation pass over all length-n paths
    with end height at most n, bucketed by (end height, end kind, max height).

    Bounded and per-kind counts for a whole query grid follow by summation,
    which keeps cross-engine acceptance sweeps affordable.
    """
    if n > cap:
        raise OracleCapError(f"oracle cap exceeded: n={n} > {cap}")
    buckets: dict[tuple[int, int, int], int] = {}
    if n == 0:
        return {}
    l2r = orientation is Orientation.L2R

    def walk(i: int, h: int, top: int, last: int) -> None:
        if i == n:
            key = (h, last, top)
            buckets[key] = buckets.get(key, 0) + 1
            return
        rem = n - i - 1
        if l2r:
            if not (alternate and last == _UP):
                for j in range(1, n + rem - h + 1):
                    nh = h + j
                    walk(i + 1, nh, nh if nh > top else top, _UP)
            if not (alternate and last == _FLAT):
                if h <= n + rem:
                    walk(i + 1, h, top, _FLAT)
            if h >= 1 and not (alternate and last == _DOWN):
                walk(i + 1, h - 1, top, _DOWN)
        else:
            if not (alternate and last == _UP):
                nh = h + 1
                walk(i + 1, nh, nh if nh > top else top, _UP)
            if not (alternate and last == _FLAT):
                walk(i + 1, h, top, _FLAT)
            if h >= 1 and not (alternate and last == _DOWN):
                for j in range(1, h + 1):
                    walk(i + 1, h - j, top, _DOWN)

    walk(0, 0, 0, _START)
    kinds = {_UP: EndKind.UP, _FLAT: EndKind.FLAT, _DOWN: EndKind.DOWN}
    return {(h, kinds[last], top): c for (h, last, top), c in buckets.items()}


def dp_count(query: PathQuery) -> int:
    """Dynamic-programming counter over (height, last-step class).

    Prefix/suffix sums make each length step cost O(max height) big-integer
    additions; the working height range is k + (n - position) when the end
    height is fixed, otherwise the bound (or n in the suffix model).
    """
    if query.is_infinite():
        raise InfiniteFamilyError("infinite family: unbounded l2r query with no end height")
    n, k, bound = query.n, query.k, query.bound
    l2r = query.orientation is Orientation.L2R
    alternate = query.alternate

    if n == 0:
        return 1 if query.kind is EndKind.ANY and k in (0, None) else 0

    def cap_at(i: int) -> int:
        c = None
        if bound is not None:
            c = bound
        if not l2r:
            c = i if c is None else min(c, i)
        if k is not None and l2r:
            reach = k + (n - i)
            c = reach if c is None else min(c, reach)
        return c

    height_top = max(cap_at(i) for i in range(1, n + 1))
    size = height_top + 2  # one slack slot for h + 1 reads
    up = [0] * size
    flat = [0] * size
    down = [0] * size
    start = [0] * size
    start[0] = 1

    for i in range(1, n + 1):
        ci = cap_at(i)
        prev_ci = cap_at(i - 1) if i > 1 else 0
        hi = min(max(ci, prev_ci) + 1, height_top + 1)
        if alternate:
            src_up = [start[h] + flat[h] + down[h] for h in range(hi + 1)]
            src_flat = [start[h] + up[h] + down[h] for h in range(hi + 1)]
            src_down = [start[h] + up[h] + flat[h] for h in range(hi + 1)]
        else:
            tot = [start[h] + up[h] + flat[h] + down[h] for h in range(hi + 1)]
            src_up = src_flat = src_down = tot
        new_up = [0] * size
        new_flat = [0] * size
        new_down = [0] * size
        if l2r:
            run = 0
            for h in range(0, ci + 1):
                if h >= 1:
                    run += src_up[h - 1]
                    new_up[h] = run
                new_flat[h] = src_flat[h]
                new_down[h] = src_down[h + 1] if h + 1 <= hi else 0
        else:
            suffix = 0
            for h in range(hi, -1, -1):
                if h <= ci:
                    new_down[h] = suffix
                    new_flat[h] = src_flat[h]
                    if h >= 1:
                        new_up[h] = src_up[h - 1]
                suffix += src_down[h]
        up, flat, down = new_up, new_flat, new_down
        start = [0] * size

    def pick(arr: list[int]) -> int:
        if k is not None:
            return arr[k] if k < size else 0
        return sum(arr[: cap_at(n) + 1])

    if query.kind is EndKind.ANY:
        return pick(up) + pick(flat) + pick(down)
    return pick({EndKind.UP: up, EndKind.FLAT: flat, EndKind.DOWN: down}[query.kind])
