"""Tests for predicted counts, comparisons and the dependency trend report."""

import pytest

from prime_heuristics.core.types import IntPolynomial, OffsetTuple, PolynomialFamily
from prime_heuristics.exceptions import DomainError, SieveRangeError
from prime_heuristics.operations.density_report import (
    dependency_trend_report,
    errors_nonincreasing,
    log_power_integral,
    logarithmic_integral,
    predicted_count_integral,
    run_comparison,
)

TWIN = OffsetTuple.twin()
X_SQUARED_PLUS_ONE = PolynomialFamily((IntPolynomial((1, 0, 1)),))


def test_zero_constant_predicts_zero():
    """Test a zero constant gives exactly 0."""
    assert predicted_count_integral(0.0, 2, 1e8) == 0.0


def test_log_integral_offset_at_two():
    """Test the k = 1 integral equals li(x) - li(2)."""
    result = predicted_count_integral(1.0, 1, 1e6)
    reference = logarithmic_integral(1e6) - logarithmic_integral(2)
    assert result == pytest.approx(reference, rel=1e-9)
    assert result == pytest.approx(78626.504, abs=0.1)
    assert logarithmic_integral(1e6) == pytest.approx(78627.549, abs=0.01)


def test_twin_prediction_at_hundred_million():
    """Test the k = 2 prediction with the twin constant at 10^8."""
    assert predicted_count_integral(1.3203236, 2, 1e8) == pytest.approx(440368, abs=2)


def test_prediction_linear_in_constant():
    """Test scaling the constant scales the count."""
    base = predicted_count_integral(1.0, 3, 1e5)
    assert predicted_count_integral(2.5, 3, 1e5) == pytest.approx(2.5 * base, rel=1e-15)


def test_prediction_strictly_increasing():
    """Test the count grows with x."""
    values = [predicted_count_integral(1.0, 2, x) for x in (2.5, 10, 99.5, 1e3, 1e4, 1e7)]
    assert all(b > a for a, b in zip(values, values[1:], strict=False))
    assert predicted_count_integral(1.0, 2, 2) == 0.0


def test_quadrature_self_consistent():
    """Test halving the tolerance moves the result by less than the tolerance."""
    coarse = log_power_integral(2, 1e8, rel_tol=1e-9)
    fine = log_power_integral(2, 1e8, rel_tol=5e-10)
    assert abs(coarse - fine) / fine < 1e-9


@pytest.mark.parametrize(
    "constant,k,x",
    [(1.0, 1, 1.5), (1.0, 0, 10.0), (-0.1, 1, 10.0)],
)
def test_prediction_domain(constant, k, x):
    """Test x < 2, k < 1 and negative constants raise DomainError."""
    with pytest.raises(DomainError):
        predicted_count_integral(constant, k, x)


def test_logarithmic_integral_domain():
    """Test li needs x > 1."""
    with pytest.raises(DomainError):
        logarithmic_integral(1.0)


def test_twin_comparison(table_1e6):
    """Test twin rows come back ascending with exact counts."""
    rows = run_comparison(
        TWIN, table_1e6, [10**6, 10**4, 10**5, 10**4], brute_force_limit=10**4
    )

    assert [row.x for row in rows] == [10**4, 10**5, 10**6]
    assert [row.empirical_count for row in rows] == [205, 1224, 8169]
    assert all(row.ratio is not None and row.ratio > 0 for row in rows)
    assert abs(rows[-1].ratio - 1) < 0.02
    assert rows[0].predicted_count < rows[1].predicted_count < rows[2].predicted_count
    assert rows[-1].constant_used == pytest.approx(1.3203236, abs=1e-6)
    assert rows[-1].truncation_limit == 10**6


def test_inadmissible_comparison_is_flagged(table_1e6):
    """Test (0, 2, 4) rows carry predicted 0 and an undefined ratio."""
    rows = run_comparison(OffsetTuple((0, 2, 4)), table_1e6, [10**3, 10**6])

    for row in rows:
        assert row.predicted_count == 0.0
        assert row.ratio is None
        assert row.flagged
        assert row.empirical_count == 1


def test_x_squared_plus_one_comparison(table_1e6):
    """Test x^2 + 1 ratios stay within 10% at 10^3..10^5."""
    rows = run_comparison(
        X_SQUARED_PLUS_ONE, table_1e6, [10**3, 10**4, 10**5], brute_force_limit=10**4
    )
    assert [row.empirical_count for row in rows] == [112, 841, 6656]
    for row in rows:
        assert 0.9 <= row.ratio <= 1.1


def test_family_and_tuple_rows_identical(table_1e6):
    """Test {x, x+2} and (0, 2) produce equal rows."""
    checkpoints = [10**3, 10**4, 10**5]
    from_tuple = run_comparison(
        TWIN, table_1e6, checkpoints, p_limit=10**5, brute_force_limit=10**3
    )
    from_family = run_comparison(
        PolynomialFamily.from_offsets(TWIN),
        table_1e6,
        checkpoints,
        p_limit=10**5,
        brute_force_limit=10**3,
    )
    assert from_family == from_tuple


def test_comparison_beyond_sieve_raises(small_table):
    """Test counting past the sieve propagates SieveRangeError."""
    with pytest.raises(SieveRangeError):
        run_comparison(TWIN, small_table, [small_table.limit], p_limit=1000)


def test_empty_checkpoints(small_table):
    """Test no checkpoints give no rows."""
    assert run_comparison(TWIN, small_table, [], p_limit=1000) == []
    assert dependency_trend_report(small_table, []) == []


def test_trend_single_checkpoint(small_table):
    """Test x = 4 gives ratio 1.4427."""
    rows = dependency_trend_report(small_table, [4])
    assert len(rows) == 1
    assert rows[0].dependency_ratio == pytest.approx(1.4427, abs=1e-4)


def test_trend_ladder(table_1e6):
    """Test errors shrink along 10^4..10^12 and end below 0.01."""
    rows = dependency_trend_report(table_1e6, [10**12, 10**4, 10**6, 10**8, 10**10])

    assert [row.x for row in rows] == [10**4, 10**6, 10**8, 10**10, 10**12]
    assert rows[-1].abs_error < 0.01
    assert errors_nonincreasing(rows)


def test_trend_beyond_sieve_raises(small_table):
    """Test sqrt of the largest checkpoint past the sieve raises SieveRangeError."""
    with pytest.raises(SieveRangeError):
        dependency_trend_report(small_table, [10**4, 10**12])
