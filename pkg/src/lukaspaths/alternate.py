"""Alternate-path counting: no two consecutive steps of the same direction.

The layered system for these paths has the bivariate kernel
(1 + z^2) u^2 - (1 - 2z^3) u + z^2, whose roots in u are the algebraic series
s1 (constant term 1) and s2 = z^2 / ((1 + z^2) s1) (valuation 2).  Every
closed form below is a Laurent-free combination of z and powers of s1; the
flat-ending paths at height 0 are generated by s2 / z.

The dominant singularity of the height-0 series is the smallest positive
root of 4z^6 - 4z^4 - 4z^3 - 4z^2 + 1, located between 0 and 1/2 and computed
here by exact-rational bisection.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from .core import EndKind, Orientation, PathQuery, dp_count
from .series import DEFAULT_ORDER, Series

#: Margin of extra working coefficients so shifts and divisions inside the
#: closed forms never eat into the requested order.
_PAD = 4

#: p(z) = 4z^6 - 4z^4 - 4z^3 - 4z^2 + 1, lowest degree first.
_SEXTIC = (1, 0, -4, -4, -4, 0, 4)

DEFAULT_ROOT_TOLERANCE = Fraction(1, 10**64)


def _kernel_discriminant(order: int) -> Series:
    return Series([1, 0, -4, -4, -4, 0, 4][:order] + [0] * max(0, order - 7))


def s1_series(order: int = DEFAULT_ORDER) -> Series:
    """The kernel root with constant term 1:
    s1 = (1 - 2z^3 + sqrt(4z^6 - 4z^4 - 4z^3 - 4z^2 + 1)) / (2 + 2z^2)."""
    if order < 1:
        raise ValueError("order must be positive")
    root = _kernel_discriminant(order).sqrt()
    num = Series([1, 0, 0, -2][:order] + [0] * max(0, order - 4)) + root
    den = Series([2, 0, 2][:order] + [0] * max(0, order - 3))
    return num / den


def s2_series(order: int = DEFAULT_ORDER) -> Series:
    """The small kernel root, from the product identity
    s1 s2 (1 + z^2) = z^2; it has valuation 2."""
    if order < 3:
        raise ValueError("order must be at least 3 to see the valuation")
    work = order + 2
    s1 = s1_series(work)
    one_z2 = Series([1, 0, 1] + [0] * (work - 3))
    inv = (one_z2 * s1).inverse()
    return inv.shift_up(2).truncate(order)


def alt_series(k: int, kind: EndKind = EndKind.ANY, order: int = DEFAULT_ORDER) -> Series:
    """Generating function of alternate prefixes ending at height k with the
    given kind of step, from the post-kernel closed forms.

    The k = 0 members carry the start-state corrections: the up family is the
    constant 1 (only the empty path), and the flat family is s2 / z.
    """
    if k < 0:
        raise ValueError("end height must be nonnegative")
    work = order + _PAD
    s1 = s1_series(work)
    z = Series.z(work)
    one_z2 = Series([1, 0, 1] + [0] * (work - 3))
    s1k = s1**k

    if kind is EndKind.UP:
        if k == 0:
            return Series.one(order)
        num = z * (z + 1)
        return (num / (one_z2 * s1k)).truncate(order)
    if kind is EndKind.DOWN:
        num = (z * z) * (2 * z * s1 + 1)
        return (num / (one_z2 * s1k * s1 * s1)).truncate(order)
    if kind is EndKind.FLAT:
        if k == 0:
            return s2_series(max(order + 1, 3)).shift_down(1).truncate(order)
        num = z * ((z - 1) * s1 + 1)
        return (num / (one_z2 * s1k * s1)).truncate(order)
    if k == 0:
        z2 = z * z
        num = s1 * s1 * z2 + 2 * s1 * z2 * z + s1 * s1 + s1 * z + z2
        return (num / (one_z2 * s1 * s1)).truncate(order)
    num = z * (2 * s1 * s1 * z + 2 * s1 * z * z + s1 + z)
    return (num / (one_z2 * s1k * s1 * s1)).truncate(order)


def alt_dp_count(n: int, k: int, kind: EndKind = EndKind.ANY) -> int:
    """Exact alternate-prefix count by the dynamic program over
    (height, last-step class) with same-class transitions forbidden."""
    return dp_count(PathQuery(n, k, kind, Orientation.L2R, alternate=True))


@dataclass(frozen=True)
class SexticRoot:
    """The dominant singularity: smallest positive root of
    4z^6 - 4z^4 - 4z^3 - 4z^2 + 1, held as an exact rational enclosure
    midpoint with its residual."""

    value: Fraction
    residual: Fraction

    def __float__(self) -> float:
        return float(self.value)


def _sextic_at(x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(_SEXTIC):
        acc = acc * x + c
    return acc


def dominant_root(tolerance: Fraction | float = DEFAULT_ROOT_TOLERANCE) -> SexticRoot:
    """Locate the root in (0, 1/2) by bisection in exact rational arithmetic
    until the enclosure is narrower than `tolerance`.

    p(0) = 1 > 0 and p(1/2) < 0 guarantee the sign change; the other factor
    of the sextic, 2z^3 + 2z^2 + 2z + 1, has no positive roots, so this is the
    smallest positive real root overall.
    """
    tol = Fraction(tolerance) if not isinstance(tolerance, Fraction) else tolerance
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    lo, hi = Fraction(0), Fraction(1, 2)
    flo = _sextic_at(lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fmid = _sextic_at(mid)
        if fmid == 0:
            lo = hi = mid
            break
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    value = (lo + hi) / 2
    return SexticRoot(value=value, residual=abs(_sextic_at(value)))


def alt_asymptotic(n: int, root: SexticRoot | None = None) -> float:
    """Leading-order asymptotic for the number of alternate paths of length n
    returning to height 0:

        sqrt(-6a^6 + 4a^4 + 3a^3 + 2a^2) (a + 1) 2^n (-a^2 + a + 1)^n
        ---------------------------------------------------------------
                    2 sqrt(pi) a^2 (a^2 + 1) n^(3/2)

    evaluated at the dominant root a.  The growth base 2(-a^2 + a + 1)
    equals 1/a exactly.

    The constant comes out of the square-root singularity at a: the singular
    part of the series is -(z+1)/(2 z^2 (1+z^2)) sqrt(p(z)) with p the sextic,
    and sqrt(-a p'(a))/4 is exactly half the radical above.  (An exact-DP
    sweep pins the factor: the ratio against the true counts tends to 1.)
    """
    if n < 1:
        raise ValueError("length must be positive")
    if root is None:
        root = dominant_root(Fraction(1, 10**30))
    a = float(root.value)
    prefactor = (
        math.sqrt(-6 * a**6 + 4 * a**4 + 3 * a**3 + 2 * a**2)
        * (a + 1)
        / (2.0 * math.sqrt(math.pi) * a * a * (a * a + 1))
    )
    growth = 2.0 * (-a * a + a + 1.0)
    return prefactor * math.exp(n * math.log(growth)) / n**1.5
