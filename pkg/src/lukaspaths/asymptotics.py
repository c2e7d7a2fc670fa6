"""Average height of the path families, exactly, and the substitution
identities that underpin the sqrt(pi n) asymptotics.

For a family with c_t(n) members of height at most t out of `total` members,
the mean height is sum_{t >= 0} (total - c_t(n)) / total, a finite sum since
c_t saturates once t reaches the family's maximum possible height.  Means are
exact rationals; only the ratio against sqrt(pi n) is floated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .bounded import bounded_gf, d_poly, n_poly, total_bounded_gf
from .core import EndKind, InfiniteFamilyError, Orientation, PathQuery, dp_count
from .counts import prefix_count, suffix_count
from .series import catalan

FAMILIES = (
    "return-to-zero",
    "prefix-at-k",
    "suffix-at-k",
    "suffix-any",
    "prefix-any",
)


@dataclass(frozen=True)
class HeightStats:
    """Exact mean height of one family at one length, with its sqrt(pi n)
    comparison."""

    n: int
    family: str
    k: Optional[int]
    mean_height: Fraction
    sqrt_pi_n: float
    ratio: float


def _family_total(n: int, family: str, k: Optional[int]) -> int:
    if family == "return-to-zero":
        return catalan(n)
    if family == "prefix-at-k":
        return prefix_count(n, k, EndKind.ANY)
    if family == "suffix-at-k":
        return suffix_count(n, k, EndKind.ANY)
    if family == "suffix-any":
        return catalan(n + 1)
    raise ValueError(f"unknown family {family!r}")


def _bounded_count(n: int, t: int, family: str, k: Optional[int], route: str) -> int:
    if family == "prefix-at-k" and t < k:
        return 0
    if family == "suffix-at-k" and t < k:
        return 0
    if route == "dp":
        if family == "return-to-zero":
            q = PathQuery(n, 0, EndKind.ANY, Orientation.L2R, bound=t)
        elif family == "prefix-at-k":
            q = PathQuery(n, k, EndKind.ANY, Orientation.L2R, bound=t)
        elif family == "suffix-at-k":
            q = PathQuery(n, k, EndKind.ANY, Orientation.R2L, bound=t)
        else:
            q = PathQuery(n, None, EndKind.ANY, Orientation.R2L, bound=t)
        return dp_count(q)
    if family == "return-to-zero":
        gf = bounded_gf(t, 0, EndKind.ANY, Orientation.L2R)
    elif family == "prefix-at-k":
        gf = bounded_gf(t, k, EndKind.ANY, Orientation.L2R)
    elif family == "suffix-at-k":
        gf = bounded_gf(t, k, EndKind.ANY, Orientation.R2L)
    else:
        gf = total_bounded_gf(t, Orientation.R2L)
    return gf.coefficients_int(n + 1)[n]


def avg_height(n: int, family: str, k: Optional[int] = None, route: str = "gf") -> HeightStats:
    """Exact mean of the max-height statistic over the family at length n.

    `route` selects how the bounded counts c_t(n) are produced: "gf" expands
    the exact rational generating functions, "dp" runs the bounded dynamic
    program.  Both are exact; they cross-check each other in the tests.
    """
    if n < 1:
        raise ValueError("length must be positive")
    if family == "prefix-any":
        raise InfiniteFamilyError(
            "infinite family: left-to-right paths with unspecified end height"
        )
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family in ("prefix-at-k", "suffix-at-k"):
        if k is None:
            raise ValueError(f"family {family!r} needs an end height k")
        if k > n:
            raise ValueError("end height exceeds the length")
    else:
        k = None
    if route not in ("gf", "dp"):
        raise ValueError("route must be 'gf' or 'dp'")

    total = _family_total(n, family, k)
    t_stop = n + (k or 0) + 1
    excess = 0  # sum over t of (total - c_t)
    for t in range(t_stop + 1):
        c_t = _bounded_count(n, t, family, k, route)
        if c_t == total:
            break
        excess += total - c_t
    else:
        raise AssertionError("bounded counts failed to saturate")
    mean = Fraction(excess, total)
    spn = math.sqrt(math.pi * n)
    return HeightStats(
        n=n,
        family=family,
        k=k,
        mean_height=mean,
        sqrt_pi_n=spn,
        ratio=float(mean) / spn,
    )


def sqrt_pi_ratio_profile(
    family: str,
    n_list: Iterable[int],
    k: Optional[int] = None,
    route: str = "gf",
) -> list[HeightStats]:
    """Mean/sqrt(pi n) ratios across several lengths, for convergence
    monitoring."""
    return [avg_height(n, family, k=k, route=route) for n in n_list]


def substitution_check(t: int, u: Fraction) -> bool:
    """Verify, in exact rational arithmetic, that D_t, N_2^t, and N_3^t
    evaluated at z = u/(1+u)^2 equal their closed forms in u:

        D_t   = (-1)^(t+3) (1 - u^(t+3)) / ((1 - u)(1 + u)^(t+2))
        N_2^t = (-1)^(t+1) u^2 (1 - u^t) / ((1 + u)^(t+3)(1 - u))
        N_3^t = (-1)^(t+1) u (1 - u^(t+2)) / ((1 - u)(1 + u)^(t+3))
    """
    if t < 0:
        raise ValueError("bound must be nonnegative")
    u = Fraction(u)
    if u == 1 or u == -1:
        raise ValueError("u = +-1 is excluded (closed forms degenerate)")
    z = u / (1 + u) ** 2
    lhs_d = d_poly(t)(z)
    lhs_n2 = n_poly(t, 2, Orientation.L2R)(z)
    lhs_n3 = n_poly(t, 3, Orientation.L2R)(z)
    one_minus_u = 1 - u
    up = 1 + u
    rhs_d = (-1) ** (t + 3) * (1 - u ** (t + 3)) / (one_minus_u * up ** (t + 2))
    rhs_n2 = (-1) ** (t + 1) * u**2 * (1 - u**t) / (up ** (t + 3) * one_minus_u)
    rhs_n3 = (-1) ** (t + 1) * u * (1 - u ** (t + 2)) / (one_minus_u * up ** (t + 3))
    return lhs_d == rhs_d and lhs_n2 == rhs_n2 and lhs_n3 == rhs_n3
