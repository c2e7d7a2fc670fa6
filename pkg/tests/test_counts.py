import pytest

from lukaspaths.core import EndKind, Orientation, PathQuery, dp_count, enumerate_count
from lukaspaths.counts import prefix_count, prefix_series, suffix_count, suffix_series
from lukaspaths.series import Series, catalan

KINDS = (EndKind.ANY, EndKind.UP, EndKind.FLAT, EndKind.DOWN)

# printed coefficient rows, z^0 .. z^9
PREFIX_ROWS = {
    0: [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862],
    1: [0, 1, 3, 9, 28, 90, 297, 1001, 3432, 11934],
    2: [0, 1, 4, 14, 48, 165, 572, 2002, 7072, 25194],
    3: [0, 1, 5, 20, 75, 275, 1001, 3640, 13260, 48450],
}
SUFFIX_ROWS = {
    0: [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862],
    1: [0, 1, 2, 5, 14, 42, 132, 429, 1430, 4862],
    2: [0, 0, 1, 3, 9, 28, 90, 297, 1001, 3432],
    3: [0, 0, 0, 1, 4, 14, 48, 165, 572, 2002],
}


@pytest.mark.parametrize("k,row", PREFIX_ROWS.items())
def test_prefix_any_rows(k, row):
    assert prefix_series(k, EndKind.ANY, 10).integer_coefficients() == row


@pytest.mark.parametrize("k,row", SUFFIX_ROWS.items())
def test_suffix_any_rows(k, row):
    assert suffix_series(k, EndKind.ANY, 10).integer_coefficients() == row


def test_prefix_series_examples():
    assert prefix_series(2, EndKind.ANY, 6).integer_coefficients()[1:] == [1, 4, 14, 48, 165]
    assert prefix_series(0, EndKind.UP, 8) == Series.one(8)
    assert prefix_series(1, EndKind.FLAT, 4).integer_coefficients()[2] == 1  # the path U1 F


def test_prefix_count_examples():
    assert prefix_count(4, 2) == 48
    assert prefix_count(9, 3) == 48450
    assert prefix_count(5, 2, EndKind.UP) == 42
    assert enumerate_count(PathQuery(5, 2, EndKind.UP)) == 42


def test_prefix_count_epsilon_convention():
    assert prefix_count(0, 0) == 1
    assert prefix_count(0, 0, EndKind.UP) == 0
    assert prefix_count(0, 1) == 0
    # the up closed form stays zero at k = 0 for every positive length
    assert all(prefix_count(n, 0, EndKind.UP) == 0 for n in range(1, 12))


def test_prefix_flat_k0_includes_single_flat_step():
    assert prefix_count(1, 0, EndKind.FLAT) == 1
    assert prefix_series(0, EndKind.FLAT, 5).integer_coefficients() == [0, 1, 1, 2, 5]


def test_suffix_series_examples():
    assert suffix_series(1, EndKind.ANY, 5).integer_coefficients() == [0, 1, 2, 5, 14]
    assert suffix_series(2, EndKind.ANY, 3).integer_coefficients()[1] == 0
    assert suffix_series(0, EndKind.FLAT, 4).integer_coefficients()[3] == 2
    assert enumerate_count(PathQuery(3, 0, EndKind.FLAT, Orientation.R2L)) == 2


def test_suffix_count_examples():
    assert suffix_count(9, 2) == 3432
    assert suffix_count(3, 3) == 1
    assert suffix_count(12, 13) == 0
    # end height 1 after a fall: oracle pins the value, the formulas agree
    assert suffix_count(4, 1, EndKind.DOWN) == 4
    assert enumerate_count(PathQuery(4, 1, EndKind.DOWN, Orientation.R2L)) == 4


def test_suffix_kind_split_sums_to_any():
    for n in range(1, 10):
        for k in range(0, n + 1):
            total = suffix_count(n, k)
            split = sum(suffix_count(n, k, kd) for kd in KINDS[1:])
            assert total == split


@pytest.mark.parametrize("orientation", [Orientation.L2R, Orientation.R2L])
def test_triple_agreement(orientation):
    """closed form == series coefficient == dynamic program, n <= 9."""
    l2r = orientation is Orientation.L2R
    count_fn = prefix_count if l2r else suffix_count
    series_fn = prefix_series if l2r else suffix_series
    for k in range(0, 10):
        for kind in KINDS:
            coeffs = series_fn(k, kind, 10).integer_coefficients()
            for n in range(1, 10):
                dp = dp_count(PathQuery(n, k, kind, orientation))
                assert count_fn(n, k, kind) == dp, (n, k, kind)
                assert coeffs[n] == dp, (n, k, kind)


def test_flat_relation():
    """h = z/(1-z) (f + g) as a series identity, both orientations."""
    order = 24
    z = Series.z(order)
    ratio = z / (Series.one(order) - z)
    for series_fn in (prefix_series, suffix_series):
        for k in range(0, 7):
            f = series_fn(k, EndKind.UP, order)
            g = series_fn(k, EndKind.DOWN, order)
            h = series_fn(k, EndKind.FLAT, order)
            expect = ratio * (f + g)
            if series_fn is prefix_series and k == 0:
                # the epsilon path feeds the flat state: z/(1-z) * f0 covers F, FF, ...
                assert h == expect
            else:
                assert h == expect


def test_shift_bijection_total_is_next_catalan():
    for n in range(0, 13):
        total = dp_count(PathQuery(n, None, orientation=Orientation.R2L))
        assert total == catalan(n + 1)
        by_formula = sum(suffix_count(n, k) for k in range(0, n + 1))
        assert by_formula == catalan(n + 1)


def test_prefix_any_k0_is_catalan():
    for n in range(0, 12):
        assert prefix_count(n, 0) == catalan(n)
