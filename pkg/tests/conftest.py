"""Test configuration and fixtures."""

import pytest

from prime_heuristics.sieve import PrimeTable, build_table


@pytest.fixture(scope="session")
def small_table() -> PrimeTable:
    """Sieve to 10^5 + 100, enough for brute-force comparisons."""
    return build_table(10**5 + 100)


@pytest.fixture(scope="session")
def table_1e6() -> PrimeTable:
    """Sieve to 10^6 + 4, the default truncation bound."""
    return build_table(10**6 + 4)


@pytest.fixture(scope="session")
def table_1e8() -> PrimeTable:
    """Sieve to 10^8 + 4 for acceptance runs."""
    return build_table(10**8 + 4)
