"""Height-bounded counting via the layered transfer-matrix system.

For a bound t the truncated state diagram yields a 3(t+1) x 3(t+1) linear
system over Z[z] in the unknowns f_0, g_0, h_0, ..., f_t, g_t, h_t (that row
order) with right-hand side (-1, 0, ..., 0)^T.  Determinants D_t of the
coefficient matrix satisfy D_{t+2} = -D_{t+1} - z D_t and equal, up to sign,
the Fibonacci polynomials; Cramer numerators N_k^t satisfy the same length
recurrence plus orientation-specific shift rules, which is how `n_poly`
computes them (the exact determinant route stays available as a cross-check).
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import EndKind, Orientation, PathQuery, dp_count
from .series import IntPoly, RationalGF, binom

_ZERO = IntPoly()
_ONE = IntPoly([1])
_NEG1 = IntPoly([-1])
_Z = IntPoly([0, 1])
_ZM1 = IntPoly([-1, 1])  # z - 1


@dataclass(frozen=True)
class SystemMatrix:
    """Coefficient matrix of the truncated counting system."""

    t: int
    orientation: Orientation
    entries: tuple[tuple[IntPoly, ...], ...]

    @property
    def size(self) -> int:
        return 3 * (self.t + 1)


def build_system_matrix(t: int, orientation: Orientation = Orientation.L2R) -> SystemMatrix:
    """Build the 3(t+1)-dimensional coefficient matrix for bound t.

    Left-to-right rows: f_k collects z times every state below level k, g_k
    references the three states of level k+1, and h_k references level k
    itself (with z - 1 on its own diagonal slot).  Right-to-left rows swap
    the roles: f_k references level k-1 and g_k every state above level k.
    """
    if t < 0:
        raise ValueError("bound must be nonnegative")
    size = 3 * (t + 1)
    l2r = orientation is Orientation.L2R
    rows = []
    for k in range(t + 1):
        f_row = [_ZERO] * size
        if k == 0:
            f_row[0] = _NEG1
        else:
            if l2r:
                for col in range(3 * k):
                    f_row[col] = _Z
            else:
                for col in range(3 * (k - 1), 3 * k):
                    f_row[col] = _Z
            f_row[3 * k] = _NEG1
        g_row = [_ZERO] * size
        g_row[3 * k + 1] = _NEG1
        if l2r:
            if k + 1 <= t:
                for col in range(3 * (k + 1), 3 * (k + 2)):
                    g_row[col] = _Z
        else:
            for col in range(3 * (k + 1), size):
                g_row[col] = _Z
        h_row = [_ZERO] * size
        h_row[3 * k] = _Z
        h_row[3 * k + 1] = _Z
        h_row[3 * k + 2] = _ZM1
        rows.extend([tuple(f_row), tuple(g_row), tuple(h_row)])
    return SystemMatrix(t, orientation, tuple(rows))


def det_poly(matrix: SystemMatrix) -> IntPoly:
    """Exact determinant over Z[z] by fraction-free (Bareiss) elimination."""
    return _bareiss([list(row) for row in matrix.entries])


def _bareiss(m: list[list[IntPoly]]) -> IntPoly:
    n = len(m)
    if n == 0:
        return _ONE
    sign = 1
    prev = _ONE
    for col in range(n - 1):
        if m[col][col].is_zero():
            for r in range(col + 1, n):
                if not m[r][col].is_zero():
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return _ZERO
        pivot = m[col][col]
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][col] * m[col][j]).exact_div(prev)
            m[i][col] = _ZERO
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def cramer_n_poly(t: int, idx: int, orientation: Orientation = Orientation.L2R) -> IntPoly:
    """N_idx^t straight from its definition: the determinant of the system
    matrix with column idx replaced by (-1, 0, ..., 0)^T.  Slow; used to
    verify the recurrence route."""
    matrix = build_system_matrix(t, orientation)
    size = matrix.size
    if not 1 <= idx <= size:
        raise ValueError("column index out of range")
    m = [list(row) for row in matrix.entries]
    for r in range(size):
        m[r][idx - 1] = _NEG1 if r == 0 else _ZERO
    return _bareiss(m)


def d_poly(t: int) -> IntPoly:
    """D_t by the linear recurrence D_{t+2} = -D_{t+1} - z D_t, anchored at
    D_0 = z - 1 and D_1 = 1 - 2z."""
    if t < 0:
        raise ValueError("bound must be nonnegative")
    a, b = _ZM1, IntPoly([1, -2])
    if t == 0:
        return a
    for _ in range(t - 1):
        a, b = b, -b - _Z * a
    return b


def fibonacci_poly(t: int) -> IntPoly:
    """The alternating-binomial Fibonacci polynomial
    F_t = 1 - C(t+1, 1) z + C(t, 2) z^2 - C(t-1, 3) z^3 + ...;
    it satisfies D_t = (-1)^(t+1) F_t."""
    if t < 0:
        raise ValueError("index must be nonnegative")
    coeffs = []
    j = 0
    while True:
        c = binom(t + 2 - j, j)
        if c == 0:
            break
        coeffs.append(c if j % 2 == 0 else -c)
        j += 1
    return IntPoly(coeffs)


# initial N_k^t values for k in {1, 2, 3}, t in {0, 1, 2}, shared by both
# orientations; everything else follows from the recurrences
_N_BASE = {
    1: (IntPoly([-1, 1]), IntPoly([1, -2]), IntPoly([-1, 3, -1])),
    2: (IntPoly([]), IntPoly([0, 0, 1]), IntPoly([0, 0, -1])),
    3: (IntPoly([0, -1]), IntPoly([0, 1, -1]), IntPoly([0, -1, 2])),
}


def n_poly(t: int, idx: int, orientation: Orientation = Orientation.L2R) -> IntPoly:
    """Cramer numerator N_idx^t by recurrence.

    Columns 1..3 follow N^{t+2} = -N^{t+1} - z N^t from tabulated starts.
    Higher columns reduce by the orientation's shift rule: left-to-right uses
    N_{k+3}^{t+1} = -N_k^t down to columns 4..6, which are N_4 = N_3,
    N_5 = -N_2^{t-1}, N_6 = N_2; right-to-left uses N_k^{t+1} = -z N_{k-3}^t.
    """
    if t < 0:
        raise ValueError("bound must be nonnegative")
    if not 1 <= idx <= 3 * (t + 1):
        raise ValueError(f"column index {idx} out of range for bound {t}")
    if idx <= 3:
        a, b, c = _N_BASE[idx]
        if t == 0:
            return a
        if t == 1:
            return b
        seq = [a, b, c]
        for _ in range(t - 2):
            seq.append(-seq[-1] - _Z * seq[-2])
        return seq[t]
    if orientation is Orientation.R2L:
        return -_Z * n_poly(t - 1, idx - 3, orientation)
    if idx >= 7:
        return -n_poly(t - 1, idx - 3, orientation)
    if idx == 4:
        return n_poly(t, 3, orientation)
    if idx == 5:
        return -n_poly(t - 1, 2, orientation)
    return n_poly(t, 2, orientation)


def bounded_gf(
    t: int,
    k: int,
    kind: EndKind = EndKind.ANY,
    orientation: Orientation = Orientation.L2R,
) -> RationalGF:
    """Generating function of height-bounded paths ending at height k with
    the given kind of step, as the Cramer solution N/(D_t).

    The sign bookkeeping lives in the N polynomials themselves, so expansions
    compare directly with counts.
    """
    if k < 0:
        raise ValueError("end height must be nonnegative")
    if k > t:
        raise ValueError(f"height above bound: k={k} > t={t}")
    den = d_poly(t)
    offsets = {EndKind.UP: (1,), EndKind.DOWN: (2,), EndKind.FLAT: (3,), EndKind.ANY: (1, 2, 3)}
    num = IntPoly()
    for off in offsets[kind]:
        num = num + n_poly(t, 3 * k + off, orientation)
    return RationalGF(num, den)


def total_bounded_gf(t: int, orientation: Orientation = Orientation.L2R) -> RationalGF:
    """Generating function of bounded paths of any end height and kind:
    1/F_t left-to-right; D_{t-2}/D_t right-to-left (geometric for t < 2)."""
    if t < 0:
        raise ValueError("bound must be nonnegative")
    if orientation is Orientation.L2R:
        return RationalGF(IntPoly([(-1) ** (t + 1)]), d_poly(t))
    if t == 0:
        return RationalGF(_ONE, IntPoly([1, -1]))
    if t == 1:
        return RationalGF(_ONE, IntPoly([1, -2]))
    return RationalGF(d_poly(t - 2), d_poly(t))


def height_distribution(n: int) -> list[int]:
    """c_t(n) for t = 0..n: length-n paths returning to height 0 whose
    height never exceeds t.  Computed by the bounded dynamic program; the
    generating-function route re-derives it in the test suite."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    return [
        dp_count(PathQuery(n, 0, EndKind.ANY, Orientation.L2R, bound=t))
        for t in range(n + 1)
    ]
