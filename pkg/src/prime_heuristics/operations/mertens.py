"""Mertens products and the dependency ratio C1(x)."""

import logging
import math

import numpy as np

from ..core.constants import EULER_GAMMA
from ..core.products import product_from_logs
from ..exceptions import DomainError, SieveRangeError
from ..sieve.table import PrimeTable

logger = logging.getLogger(__name__)

# Smallest y for which the classical Mertens envelope 1/(2 ln^2 y) applies.
MERTENS_CHECK_MIN = 285


def sqrt_bound(x: int) -> int:
    """Get floor(sqrt(x)) computed exactly on integers."""
    root = math.isqrt(x)
    assert root * root <= x < (root + 1) * (root + 1)
    return root


def mertens_product(table: PrimeTable, y: int) -> float:
    """Compute prod_{p <= y} (1 - 1/p).

    Args:
        table: prime table covering y
        y: prime bound; y < 2 gives the empty product 1

    Returns:
        The product, accumulated as a compensated sum of log1p(-1/p)

    Raises:
        SieveRangeError: If y exceeds the table limit
    """
    primes = table.primes_up_to(y)
    return product_from_logs(np.log1p(-1.0 / primes.astype(np.float64)))


def heuristic_density(x: float) -> float:
    """Get 1/ln(x), the probabilistic model's chance that x is prime.

    Raises:
        DomainError: If x <= 1
    """
    if x <= 1:
        raise DomainError(f"heuristic_density needs x > 1, got {x}")
    return 1.0 / math.log(x)


def dependency_ratio(table: PrimeTable, x: int) -> float:
    """Measure C1(x) = (1/ln x) / prod_{p <= sqrt x} (1 - 1/p).

    Args:
        table: prime table covering floor(sqrt(x))
        x: integer >= 4

    Returns:
        Finite-x dependency ratio, tending to 0.5 e^gamma

    Raises:
        DomainError: If x < 4
        SieveRangeError: If floor(sqrt(x)) exceeds the table limit
    """
    if x < 4:
        raise DomainError(f"dependency_ratio needs x >= 4, got {x}")

    root = sqrt_bound(x)
    if root > table.limit:
        raise SieveRangeError(
            f"dependency_ratio({x}) needs primes up to {root}, sieve limit is {table.limit}"
        )

    return heuristic_density(x) / mertens_product(table, root)


def mertens_theorem_check(table: PrimeTable, y: int) -> float:
    """Get prod_{p <= y}(1 - 1/p) * e^gamma * ln(y), which tends to 1.

    Raises:
        DomainError: If y < 285
        SieveRangeError: If y exceeds the table limit
    """
    if y < MERTENS_CHECK_MIN:
        raise DomainError(
            f"mertens_theorem_check needs y >= {MERTENS_CHECK_MIN}, got {y}"
        )
    return mertens_product(table, y) * math.exp(EULER_GAMMA) * math.log(y)


def mertens_envelope(y: int) -> float:
    """Get the classical bound 1/(2 ln^2 y) on |mertens_theorem_check(y) - 1|."""
    return 1.0 / (2.0 * math.log(y) ** 2)
