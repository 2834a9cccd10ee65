"""Tests for Mertens products and the dependency ratio."""

import math

import pytest

from prime_heuristics.core.constants import CONSTANTS, EULER_GAMMA, HALF_E_GAMMA
from prime_heuristics.exceptions import DomainError, SieveRangeError
from prime_heuristics.operations.mertens import (
    dependency_ratio,
    heuristic_density,
    mertens_envelope,
    mertens_product,
    mertens_theorem_check,
    sqrt_bound,
)


def test_half_e_gamma_constant():
    """Test 0.5 e^gamma = 0.8905362."""
    assert HALF_E_GAMMA == pytest.approx(0.8905362, abs=1e-7)
    assert CONSTANTS.half_e_gamma == HALF_E_GAMMA
    assert EULER_GAMMA == pytest.approx(0.5772156649, abs=1e-10)


def test_mertens_product_small(small_table):
    """Test exact small products."""
    assert mertens_product(small_table, 1) == 1.0
    assert mertens_product(small_table, 2) == pytest.approx(0.5, rel=1e-15)
    assert mertens_product(small_table, 10) == pytest.approx(48 / 210, rel=1e-14)


def test_mertens_product_monotone(small_table):
    """Test the product never increases with y."""
    values = [mertens_product(small_table, y) for y in range(1, 500)]
    assert all(b <= a for a, b in zip(values, values[1:], strict=False))


def test_mertens_product_out_of_range(small_table):
    """Test y beyond the sieve raises SieveRangeError."""
    with pytest.raises(SieveRangeError):
        mertens_product(small_table, small_table.limit + 1)


def test_heuristic_density():
    """Test 1/ln x and its domain."""
    assert heuristic_density(math.e) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        heuristic_density(1)


def test_dependency_ratio_at_four(small_table):
    """Test C1(4) = (1/ln 4) / (1/2)."""
    assert dependency_ratio(small_table, 4) == pytest.approx(1.4427, abs=1e-4)


def test_dependency_ratio_domain(small_table):
    """Test x < 4 raises DomainError and sqrt(x) past the sieve raises SieveRangeError."""
    with pytest.raises(DomainError):
        dependency_ratio(small_table, 3)
    with pytest.raises(SieveRangeError):
        dependency_ratio(small_table, (small_table.limit + 1) ** 2)


@pytest.mark.parametrize("x", [4, 99, 100, 10**4 + 1, 10**6, 10**10])
def test_dependency_ratio_is_density_over_product(small_table, x):
    """Test C1(x) is 1/ln x divided by the Mertens product at floor(sqrt x)."""
    expected = heuristic_density(x) / mertens_product(small_table, sqrt_bound(x))
    assert dependency_ratio(small_table, x) == pytest.approx(expected, rel=1e-12)


def test_dependency_ratio_approaches_limit(table_1e6):
    """Test C1(10^12) lies within 0.01 of 0.5 e^gamma with a 10^6 sieve."""
    assert abs(dependency_ratio(table_1e6, 10**12) - 0.8905362) < 0.01


def test_sqrt_bound_exact():
    """Test integer square roots at perfect squares and their neighbours."""
    assert sqrt_bound(10**12) == 10**6
    assert sqrt_bound(10**12 - 1) == 10**6 - 1
    assert sqrt_bound(4) == 2


def test_mertens_theorem_check_ladder(table_1e6):
    """Test the Mertens check error shrinks over 10^3..10^6 and meets 5e-3."""
    errors = [abs(mertens_theorem_check(table_1e6, 10**e) - 1) for e in range(3, 7)]

    assert errors[-1] < 5e-3
    assert errors[-1] < errors[0]
    assert all(b < a for a, b in zip(errors, errors[1:], strict=False))


def test_mertens_theorem_check_envelope(table_1e6):
    """Test the classical envelope bounds the check for y >= 285."""
    for y in (285, 1000, 10**4, 10**5, 10**6):
        assert abs(mertens_theorem_check(table_1e6, y) - 1) < mertens_envelope(y)


def test_mertens_theorem_check_domain(small_table):
    """Test y below 285 raises DomainError."""
    with pytest.raises(DomainError):
        mertens_theorem_check(small_table, 284)
