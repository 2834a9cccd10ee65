"""Prime k-tuples: residue counts, singular series, twin machinery and counts."""

import logging
from fractions import Fraction
from functools import partial

import numpy as np
import sympy
from numpy.typing import NDArray

from ..core.constants import DEFAULT_BRUTE_FORCE_LIMIT, HALF_E_GAMMA
from ..core.products import (
    product_from_logs,
    singular_product,
    truncated_constant,
    vanishing_constant,
)
from ..core.types import OffsetTuple, SieveConfig
from ..exceptions import DomainError, HeuristicsError, SieveRangeError
from ..models import SingularSeries, TruncatedConstant
from ..sieve.primality import require_prime
from ..sieve.segments import run_segments, run_segments_sync
from ..sieve.table import PrimeTable
from .mertens import sqrt_bound

logger = logging.getLogger(__name__)

# Number of primes just below the brute-force cut-over checked against the shortcut
CROSS_CHECK_WINDOW = 8


def residue_count_brute_force(offsets: tuple[int, ...], p: int) -> int:
    """Count x in [0, p) with prod_i (x + offset_i) = 0 (mod p), by evaluation."""
    x = np.arange(p, dtype=np.int64)
    product = np.ones(p, dtype=np.int64)
    for offset in offsets:
        product = product * ((x + offset) % p) % p
    return int(np.count_nonzero(product == 0))


def residue_count_shortcut(offsets: tuple[int, ...], p: int) -> int:
    """Count distinct classes (-offset_i) mod p."""
    return len({(-offset) % p for offset in offsets})


def residue_count(
    tuple_: OffsetTuple, p: int, brute_force_limit: int = DEFAULT_BRUTE_FORCE_LIMIT
) -> int:
    """Compute w_k(p) for a prime p.

    Args:
        tuple_: offset pattern
        p: prime modulus
        brute_force_limit: largest p evaluated by brute force over residues

    Returns:
        Number of residues x mod p where the tuple product vanishes

    Raises:
        DomainError: If p is not prime
    """
    require_prime(p)
    if p <= brute_force_limit:
        return residue_count_brute_force(tuple_.offsets, p)
    return residue_count_shortcut(tuple_.offsets, p)


def residue_counts(
    tuple_: OffsetTuple,
    primes: NDArray[np.int64],
    brute_force_limit: int = DEFAULT_BRUTE_FORCE_LIMIT,
) -> NDArray[np.int64]:
    """Compute w_k(p) for an ascending array of primes.

    Brute force up to brute_force_limit, the distinct-offsets shortcut above,
    with the two methods cross-checked on the last brute-forced primes.
    """
    cut = int(np.searchsorted(primes, brute_force_limit, side="right"))
    counts = np.empty(primes.size, dtype=np.int64)

    for i, p in enumerate(primes[:cut].tolist()):
        counts[i] = residue_count_brute_force(tuple_.offsets, p)

    for i in range(max(0, cut - CROSS_CHECK_WINDOW), cut):
        p = int(primes[i])
        if residue_count_shortcut(tuple_.offsets, p) != counts[i]:
            raise HeuristicsError(
                f"Residue count mismatch for {tuple_} at p={p}: brute force "
                f"{counts[i]}, shortcut {residue_count_shortcut(tuple_.offsets, p)}"
            )

    rest = primes[cut:]
    if rest.size:
        # distinct offsets stay distinct modulo any p above the largest offset
        counts[cut:] = tuple_.k
        small = np.flatnonzero(rest <= tuple_.max_offset)
        for i in small.tolist():
            counts[cut + i] = residue_count_shortcut(tuple_.offsets, int(rest[i]))
        logger.debug(
            "Residue counts for %s: %d brute force, %d by shortcut",
            tuple_,
            cut,
            rest.size,
        )

    return counts


def covered_prime(tuple_: OffsetTuple) -> int | None:
    """Get the smallest prime p <= k whose residues the tuple covers, if any."""
    for p in sympy.primerange(2, tuple_.k + 1):
        if residue_count_brute_force(tuple_.offsets, int(p)) >= p:
            return int(p)
    return None


def is_admissible(tuple_: OffsetTuple) -> bool:
    """Check that residue_count(tuple, p) < p for every prime p <= k."""
    return covered_prime(tuple_) is None


def singular_series(
    tuple_: OffsetTuple,
    table: PrimeTable,
    p_limit: int,
    brute_force_limit: int = DEFAULT_BRUTE_FORCE_LIMIT,
) -> SingularSeries:
    """Compute D_k = prod_{p <= p_limit} (1 - w_k(p)/p) / (1 - 1/p)^k.

    Args:
        tuple_: offset pattern
        table: prime table covering p_limit
        p_limit: truncation bound
        brute_force_limit: largest p whose w_k(p) is brute forced

    Returns:
        SingularSeries; inadmissible tuples get an exact 0 constant

    Raises:
        SieveRangeError: If p_limit exceeds the table limit
    """
    primes = table.primes_up_to(p_limit)

    vanishing = covered_prime(tuple_)
    if vanishing is not None:
        logger.info("Tuple %s is inadmissible (covers all classes mod %d)", tuple_, vanishing)
        constant = vanishing_constant(p_limit, vanishing)
    else:
        counts = residue_counts(tuple_, primes, brute_force_limit)
        constant = singular_product(primes, counts, tuple_.k, p_limit)
        logger.info(
            "Singular series %s: value=%r truncation=%d delta=%.3e",
            tuple_,
            constant.value,
            p_limit,
            constant.last_doubling_delta,
        )

    return SingularSeries(
        offsets=tuple_.offsets, constant=constant, admissible=vanishing is None
    )


def twin_constant_closed_form(table: PrimeTable, p_limit: int) -> TruncatedConstant:
    """Compute 2 * prod_{2 < p <= p_limit} p(p - 2)/(p - 1)^2.

    Raises:
        SieveRangeError: If p_limit exceeds the table limit
    """
    primes = table.primes_up_to(p_limit)
    odd = primes[primes > 2]
    # p(p - 2)/(p - 1)^2 = 1 - 1/(p - 1)^2
    log_factors = np.log1p(-1.0 / np.square(odd.astype(np.float64) - 1.0))
    return truncated_constant(odd, log_factors, p_limit, scale=2.0)


def conditional_factor(p: int) -> Fraction:
    """Get the chance that x + 2 avoids p given x avoids p: 1 at p = 2, else (p-2)/(p-1).

    Raises:
        DomainError: If p is not prime
    """
    require_prime(p)
    if p == 2:
        return Fraction(1)
    return Fraction(p - 2, p - 1)


def _root_within_table(table: PrimeTable, x: int) -> int:
    root = sqrt_bound(x)
    if root > table.limit:
        raise SieveRangeError(
            f"x={x} needs primes up to {root}, sieve limit is {table.limit}"
        )
    return root


def conditional_probability_estimate(table: PrimeTable, x: int) -> float:
    """Model Pr(A2|A1) as 0.5 e^gamma * prod_{2 < p <= sqrt x} (p - 2)/(p - 1).

    Raises:
        SieveRangeError: If floor(sqrt(x)) exceeds the table limit
    """
    primes = table.primes_up_to(_root_within_table(table, x))
    odd = primes[primes > 2].astype(np.float64)
    return product_from_logs(np.log1p(-1.0 / (odd - 1.0)), scale=HALF_E_GAMMA)


def dependency_ratio_product(table: PrimeTable, x: int) -> float:
    """Get C(x) = 2 * prod_{2 < p <= sqrt x} p(p - 2)/(p - 1)^2.

    Raises:
        DomainError: If x < 4
        SieveRangeError: If floor(sqrt(x)) exceeds the table limit
    """
    if x < 4:
        raise DomainError(f"dependency_ratio_product needs x >= 4, got {x}")
    return twin_constant_closed_form(table, _root_within_table(table, x)).value


def _count_chunk(
    table: PrimeTable, halves: tuple[int, ...], last: int, lo: int, hi: int
) -> int:
    """Count odd x = 2i + 1 with lo <= i < hi, i <= last, all x + offset prime."""
    hi = min(hi, last + 1)
    if hi <= lo:
        return 0

    span = halves[-1]
    flags = table.odd_flags(lo, hi + span)
    hits = flags[: hi - lo].copy()
    for half in halves[1:]:
        hits &= flags[half : half + hi - lo]
    return int(np.count_nonzero(hits))


def _constellation_work(
    table: PrimeTable, tuple_: OffsetTuple, x_limit: int
) -> tuple[partial[int], int, int]:
    if x_limit + tuple_.max_offset > table.limit:
        raise SieveRangeError(
            f"Counting {tuple_} to {x_limit} needs sieve to "
            f"{x_limit + tuple_.max_offset}, limit is {table.limit}"
        )

    halves = tuple(offset // 2 for offset in tuple_.offsets)
    last = (x_limit - 1) // 2
    work = partial(_count_chunk, table, halves, last)

    # x = 2 is the only even start; x + offset is even and > 2 once offset > 0
    even_hit = int(x_limit >= 2 and all(table.is_prime(2 + o) for o in tuple_.offsets))
    return work, last + 1, even_hit


def count_constellations(
    table: PrimeTable,
    tuple_: OffsetTuple,
    x_limit: int,
    config: SieveConfig | None = None,
) -> int:
    """Count x <= x_limit with x + offset_i prime for every offset.

    Args:
        table: prime table covering x_limit + max offset
        tuple_: offset pattern
        x_limit: inclusive bound on the first member
        config: segment size and thread count for the counting fan-out

    Returns:
        Exact constellation count

    Raises:
        SieveRangeError: If x_limit + max offset exceeds the table limit
    """
    config = config or SieveConfig()
    if x_limit < 1:
        return 0

    work, total, even_hit = _constellation_work(table, tuple_, x_limit)
    return even_hit + sum(run_segments_sync(work, total, config))


async def count_constellations_async(
    table: PrimeTable,
    tuple_: OffsetTuple,
    x_limit: int,
    config: SieveConfig | None = None,
) -> int:
    """Count constellations with chunks fanned out concurrently."""
    config = config or SieveConfig()
    if x_limit < 1:
        return 0

    work, total, even_hit = _constellation_work(table, tuple_, x_limit)
    return even_hit + sum(await run_segments(work, total, config))


def empirical_conditional_ratio(
    table: PrimeTable, x: int, config: SieveConfig | None = None
) -> float:
    """Measure [pi2(x)/pi(x)] / [pi(x)/x], the data analogue of C(x).

    Raises:
        DomainError: If pi(x) = 0
        SieveRangeError: If x + 2 exceeds the table limit
    """
    twins = count_constellations(table, OffsetTuple.twin(), x, config)
    primes = table.prime_count(x)
    if primes == 0:
        raise DomainError(f"No primes <= {x}; conditional ratio undefined")
    return (twins / primes) / (primes / x)


def conditional_dependency_ratio(
    table: PrimeTable,
    tuple_: OffsetTuple,
    x: int,
    brute_force_limit: int = DEFAULT_BRUTE_FORCE_LIMIT,
    config: SieveConfig | None = None,
) -> float:
    """Measure the dependency ratio of the last tuple member given the others.

    Computes [N(tuple, x) / N(prefix, x)] divided by the independence model
    prod_{p <= sqrt x} (p - w_k(p)) / (p - w_{k-1}(p)). For (0, 2) the model
    product is prod_{2 < p <= sqrt x} (p - 2)/(p - 1).

    Raises:
        ValidationError: If the tuple has fewer than two offsets
        DomainError: If the prefix never occurs or the model product vanishes
        SieveRangeError: If the sieve is too small
    """
    prefix = tuple_.prefix
    root = _root_within_table(table, x)

    full_count = count_constellations(table, tuple_, x, config)
    prefix_count = count_constellations(table, prefix, x, config)
    if prefix_count == 0:
        raise DomainError(f"Prefix {prefix} has no occurrences up to {x}")

    primes = table.primes_up_to(root)
    w_full = residue_counts(tuple_, primes, brute_force_limit)
    w_prefix = residue_counts(prefix, primes, brute_force_limit)

    numerators = primes - w_full
    denominators = primes - w_prefix
    if np.any(numerators <= 0) or np.any(denominators <= 0):
        raise DomainError(
            f"Independence model for {tuple_} vanishes below {root}; ratio undefined"
        )

    log_factors = np.log1p(
        (w_prefix - w_full).astype(np.float64) / denominators.astype(np.float64)
    )
    model = product_from_logs(log_factors)
    return (full_count / prefix_count) / model
