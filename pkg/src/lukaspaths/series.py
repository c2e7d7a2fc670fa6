"""Exact arithmetic kernels: truncated power series over Q, integer
polynomials, and rational generating functions.

Everything is exact.  Series coefficients are `fractions.Fraction`, polynomial
coefficients are Python ints, and any value that leaves the library as a path
count is asserted to be a nonnegative integer at the boundary.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

#: Default truncation order for generating-function expansions.  Overridable
#: per call and, on the command line, through the LUKAS_ORDER environment
#: variable.
DEFAULT_ORDER = 64

Rat = Union[int, Fraction]


def binom(a: int, b: int) -> int:
    """C(a, b) with the convention C(a, b) = 0 whenever b < 0 or b > a.

    The zero convention makes the ballot-style counting formulas total
    functions at their boundary arguments.
    """
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def catalan(n: int) -> int:
    """The n-th Catalan number C(2n, n) / (n + 1)."""
    return comb(2 * n, n) // (n + 1)


class Series:
    """Truncated formal power series with exact rational coefficients.

    A series knows its coefficients for z^0 .. z^(order-1) and nothing beyond;
    binary operations truncate to the shorter operand, so results never claim
    coefficients that were not actually determined.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rat]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = cs

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value: Rat, order: int) -> "Series":
        return cls([value] + [0] * (order - 1))

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls.constant(0, order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def z(cls, order: int) -> "Series":
        if order < 2:
            raise ValueError("order must be at least 2 to represent z")
        return cls([0, 1] + [0] * (order - 2))

    # -- basic views -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n < len(self.coeffs):
            raise IndexError(f"coefficient {n} unknown at truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[:order])

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (= order if all zero)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return self.order

    def integer_coefficients(self) -> list[int]:
        """Coefficients as ints; raises if any is not an integer."""
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient {i} = {c} is not an integer")
            out.append(c.numerator)
        return out

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "Series":
        if isinstance(other, Series):
            m = min(self.order, other.order)
            return Series([self.coeffs[i] + other.coeffs[i] for i in range(m)])
        return Series((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs])

    def __sub__(self, other) -> "Series":
        return self + (-other if isinstance(other, Series) else -Fraction(other))

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            f = Fraction(other)
            return Series([c * f for c in self.coeffs])
        m = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * m
        for i in range(m):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(m - i):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return Series(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            raise ValueError("negative powers: invert first")
        result = Series.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> "Series":
        """Multiplicative inverse; requires a nonzero constant term."""
        b = self.coeffs
        if b[0] == 0:
            raise ValueError("non-invertible series (zero constant term)")
        m = self.order
        inv0 = 1 / b[0]
        out = [inv0]
        for n in range(1, m):
            acc = Fraction(0)
            for j in range(1, n + 1):
                if b[j] != 0:
                    acc += b[j] * out[n - j]
            out.append(-acc * inv0)
        return Series(out)

    def __truediv__(self, other) -> "Series":
        if isinstance(other, Series):
            b = other.coeffs
            if b[0] == 0:
                raise ValueError("non-invertible series (zero constant term)")
            m = min(self.order, other.order)
            a = self.coeffs
            inv0 = 1 / b[0]
            out: list[Fraction] = []
            for n in range(m):
                acc = a[n]
                for j in range(1, n + 1):
                    if b[j] != 0:
                        acc -= b[j] * out[n - j]
                out.append(acc * inv0)
            return Series(out)
        return self * (Fraction(1) / Fraction(other))

    def __rtruediv__(self, other) -> "Series":
        return self.inverse() * other

    def sqrt(self) -> "Series":
        """Square root with constant term +1, by Newton iteration.

        Each round s -> (s + a/s)/2 doubles the number of correct
        coefficients, starting from s = 1.
        """
        if self.coeffs[0] != 1:
            raise ValueError("sqrt requires unit constant term")
        n = self.order
        acc: list[Fraction] = [Fraction(1)]
        m = 1
        while m < n:
            m = min(2 * m, n)
            s = Series(acc + [Fraction(0)] * (m - len(acc)))
            s = (s + self.truncate(m) / s) * Fraction(1, 2)
            acc = list(s.coeffs)
        return Series(acc)

    # -- shifts ------------------------------------------------------------

    def shift_up(self, j: int) -> "Series":
        """Multiply by z^j, keeping the truncation order."""
        if j == 0:
            return self
        keep = max(self.order - j, 0)
        return Series([Fraction(0)] * min(j, self.order) + list(self.coeffs[:keep]))

    def shift_down(self, j: int) -> "Series":
        """Divide by z^j; requires valuation >= j.  The order shrinks by j."""
        if j == 0:
            return self
        if self.order <= j:
            raise ValueError("order too small to shift down")
        if any(c != 0 for c in self.coeffs[:j]):
            raise ValueError("valuation too small to divide by z^j")
        return Series(self.coeffs[j:])

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    __hash__ = None  # mutable-free but equality is structural; keep unhashable

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"Series([{head}{tail}] order={self.order})"


class IntPoly:
    """Integer-coefficient polynomial, lowest degree first.

    Canonical form: no trailing zero coefficients; the zero polynomial is the
    empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: Rat) -> Rat:
        acc: Rat = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def shift_up(self, j: int) -> "IntPoly":
        """Multiply by z^j."""
        if self.is_zero():
            return self
        return IntPoly([0] * j + list(self.coeffs))

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Exact polynomial quotient over Z; raises if the division leaves a
        remainder or a fractional coefficient."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return IntPoly()
        rem = list(self.coeffs)
        d = other.coeffs
        dd = len(d) - 1
        if len(rem) - 1 < dd:
            raise ValueError("inexact polynomial division")
        q = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            lead = rem[k]
            if lead == 0:
                continue
            if lead % d[dd] != 0:
                raise ValueError("inexact polynomial division")
            f = lead // d[dd]
            q[k - dd] = f
            for j in range(dd + 1):
                rem[k - dd + j] -= f * d[j]
        if any(rem):
            raise ValueError("inexact polynomial division")
        return IntPoly(q)

    def to_series(self, order: int) -> Series:
        cs = list(self.coeffs[:order])
        return Series(cs + [0] * (order - len(cs)))

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


class RationalGF:
    """A rational generating function num/den over Z[z] with den(0) != 0.

    The sign is normalized so that den(0) > 0, which makes textbook
    denominators like the Fibonacci polynomials come out positively.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly):
        d0 = den(0)
        if d0 == 0:
            raise ValueError("non-expandable: denominator vanishes at z = 0")
        if d0 < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    def expand(self, order: int) -> Series:
        """Power-series expansion to the given order, by the linear
        recurrence the denominator induces."""
        num, den = self.num.coeffs, self.den.coeffs
        d0 = Fraction(den[0])
        out: list[Fraction] = []
        for m in range(order):
            acc = Fraction(num[m]) if m < len(num) else Fraction(0)
            for j in range(1, min(m, len(den) - 1) + 1):
                if den[j]:
                    acc -= den[j] * out[m - j]
            out.append(acc / d0)
        return Series(out)

    def coefficients_int(self, order: int) -> list[int]:
        """Integer fast path of :meth:`expand` for den(0) = +-1 denominators;
        falls back to the exact rational route otherwise."""
        num, den = self.num.coeffs, self.den.coeffs
        if den[0] not in (1, -1):
            return self.expand(order).integer_coefficients()
        d0 = den[0]
        out: list[int] = []
        for m in range(order):
            acc = num[m] if m < len(num) else 0
            for j in range(1, min(m, len(den) - 1) + 1):
                if den[j]:
                    acc -= den[j] * out[m - j]
            out.append(acc if d0 == 1 else -acc)
        return out

    def coefficient(self, n: int) -> Fraction:
        return self.expand(n + 1)[n]

    def __eq__(self, other) -> bool:
        """Equality as rational functions (cross-multiplied)."""
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalGF({self.num!r}, {self.den!r})"


def expand_rational(gf: RationalGF, order: int) -> Series:
    """Expand num/den as a power series to the given order."""
    return gf.expand(order)


def catalan_gf(order: int) -> Series:
    """The Catalan generating function (1 - sqrt(1-4z)) / (2z) to the given
    order; coefficient n is the n-th Catalan number."""
    if order < 1:
        raise ValueError("order must be positive")
    return Series([catalan(n) for n in range(order)])


def lukas_power_coeff(n: int, k: int) -> int:
    """Coefficient of z^n in ((1 - sqrt(1-4z)) / (2z))^k.

    Computed by the difference of binomials C(2n-1+k, n) - C(2n-1+k, n-1);
    for n = 0 the coefficient is 1 for every k since the base series has unit
    constant term.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n == 0:
        return 1
    return binom(2 * n - 1 + k, n) - binom(2 * n - 1 + k, n - 1)


def lukas_power_coeff_ballot(n: int, k: int) -> int:
    """Equivalent ballot-style closed form k/(2n+k) * C(2n+k, n), valid for
    k >= 1; kept as an independent cross-check of `lukas_power_coeff`."""
    if k < 1:
        raise ValueError("ballot form requires k >= 1")
    val = k * binom(2 * n + k, n)
    q, r = divmod(val, 2 * n + k)
    if r:
        raise ArithmeticError(f"ballot form not integral at n={n}, k={k}")
    return q
