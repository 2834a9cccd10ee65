"""Compensated log-space accumulation of prime products."""

import logging
import math

import numpy as np
from numpy.typing import NDArray

from ..models import TruncatedConstant

logger = logging.getLogger(__name__)


def log_sum(log_terms: NDArray[np.float64]) -> float:
    """Sum log factors with error-free (Shewchuk) accumulation."""
    return math.fsum(log_terms.tolist())


def product_from_logs(log_terms: NDArray[np.float64], scale: float = 1.0) -> float:
    """Exponentiate a compensated sum of log factors once.

    Args:
        log_terms: log of each factor
        scale: multiplier applied after exponentiation

    Returns:
        scale * prod(exp(log_terms)); an empty product gives scale
    """
    return scale * math.exp(log_sum(log_terms))


def relative_delta(current: float, previous: float) -> float:
    """Get |current - previous| / current, 0 for a zero product."""
    if current == 0:
        return 0.0
    return abs(current - previous) / current


def truncated_constant(
    primes: NDArray[np.int64],
    log_factors: NDArray[np.float64],
    truncation_limit: int,
    scale: float = 1.0,
) -> TruncatedConstant:
    """Build a truncated product with its doubling diagnostic.

    Args:
        primes: ascending primes, one per factor
        log_factors: log of the factor at each prime
        truncation_limit: bound P of the product over p <= P
        scale: constant multiplier outside the product

    Returns:
        TruncatedConstant with value(P) and |value(P) - value(P/2)| / value(P)
    """
    half = int(np.searchsorted(primes, truncation_limit // 2, side="right"))

    value = product_from_logs(log_factors, scale)
    half_value = product_from_logs(log_factors[:half], scale)

    return TruncatedConstant(
        value=value,
        truncation_limit=truncation_limit,
        last_doubling_delta=relative_delta(value, half_value),
    )


def vanishing_constant(truncation_limit: int, prime: int) -> TruncatedConstant:
    """Get the exact-zero product caused by a vanishing factor at prime."""
    logger.debug("Product vanishes at p=%d", prime)
    return TruncatedConstant(
        value=0.0,
        truncation_limit=truncation_limit,
        last_doubling_delta=0.0,
        vanishing_prime=prime,
    )


def singular_log_factors(
    primes: NDArray[np.int64], counts: NDArray[np.int64], k: int
) -> NDArray[np.float64]:
    """Get log((1 - w(p)/p) / (1 - 1/p)^k) for each prime.

    Counts must be strictly below p; callers zero the product otherwise.
    """
    p = primes.astype(np.float64)
    w = counts.astype(np.float64)
    return np.log1p(-w / p) - k * np.log1p(-1.0 / p)


def singular_product(
    primes: NDArray[np.int64],
    counts: NDArray[np.int64],
    k: int,
    truncation_limit: int,
) -> TruncatedConstant:
    """Truncated singular series prod (1 - w(p)/p)/(1 - 1/p)^k.

    Shared by offset tuples and polynomial families, so identical residue
    counts give bit-identical constants.
    """
    covered = np.flatnonzero(counts >= primes)
    if covered.size:
        return vanishing_constant(truncation_limit, int(primes[covered[0]]))

    return truncated_constant(
        primes, singular_log_factors(primes, counts, k), truncation_limit
    )
