"""Odd-only segmented sieve of Eratosthenes.

Flag index i stands for the odd number 2*i + 1, so index 0 is 1 (never prime).
"""

import asyncio
import logging
import math
from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

import numpy as np
from numpy.typing import NDArray

from ..core.types import SieveConfig

logger = logging.getLogger(__name__)

T = TypeVar("T")


def odd_index_count(limit: int) -> int:
    """Get the number of odd flags 1, 3, ..., <= limit."""
    return (limit + 1) // 2


def base_primes(limit: int) -> NDArray[np.int64]:
    """Get all odd primes <= isqrt(limit) with a plain sieve."""
    root = math.isqrt(limit)
    if root < 3:
        return np.array([], dtype=np.int64)

    flags = np.ones(root + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(root) + 1):
        if flags[p]:
            flags[p * p :: p] = False

    primes = np.flatnonzero(flags).astype(np.int64)
    return primes[primes > 2]


def segment_bounds(total: int, segment_size: int) -> Iterator[tuple[int, int]]:
    """Split [0, total) into consecutive [lo, hi) index ranges."""
    for lo in range(0, total, segment_size):
        yield lo, min(lo + segment_size, total)


def sieve_segment(lo: int, hi: int, odd_primes: NDArray[np.int64]) -> NDArray[np.bool_]:
    """Sieve odd flags for indices [lo, hi).

    Args:
        lo: first flag index
        hi: one past the last flag index
        odd_primes: odd primes up to the square root of the overall limit

    Returns:
        Boolean mask, True where 2*i + 1 is prime
    """
    mask = np.ones(hi - lo, dtype=bool)
    if lo == 0:
        mask[0] = False

    n_lo = 2 * lo + 1
    n_hi = 2 * (hi - 1) + 1

    for p in odd_primes.tolist():
        square = p * p
        if square > n_hi:
            break

        first = ((n_lo + p - 1) // p) * p
        if first % 2 == 0:
            first += p
        start = max(square, first)
        if start > n_hi:
            continue

        # consecutive odd multiples are 2p apart, i.e. p flags apart
        mask[(start - 1) // 2 - lo :: p] = False

    return mask


def pack_segment(
    lo: int, hi: int, odd_primes: NDArray[np.int64]
) -> tuple[NDArray[np.uint8], int]:
    """Sieve one segment and pack it to one bit per odd number."""
    mask = sieve_segment(lo, hi, odd_primes)
    count = int(np.count_nonzero(mask))
    logger.debug("Sieved flags [%d, %d): %d odd primes", lo, hi, count)
    return np.packbits(mask), count


async def run_segments(
    work: Callable[[int, int], T], total: int, config: SieveConfig
) -> list[T]:
    """Run work(lo, hi) over all segments concurrently.

    Args:
        work: function called once per [lo, hi) range
        total: number of indices to cover
        config: sieve configuration (segment size and thread count)

    Returns:
        Results in segment order, independent of thread count
    """
    loop = asyncio.get_running_loop()

    with ThreadPoolExecutor(max_workers=config.threads) as executor:
        tasks = [
            loop.run_in_executor(executor, work, lo, hi)
            for lo, hi in segment_bounds(total, config.segment_size)
        ]
        return list(await asyncio.gather(*tasks))


def run_segments_sync(
    work: Callable[[int, int], T], total: int, config: SieveConfig
) -> list[T]:
    """Run segments from synchronous code, inside or outside an event loop.

    Returns:
        Results in segment order, independent of thread count
    """
    bounds = list(segment_bounds(total, config.segment_size))
    if config.threads == 1:
        return [work(lo, hi) for lo, hi in bounds]

    with ThreadPoolExecutor(max_workers=config.threads) as executor:
        los = [lo for lo, _ in bounds]
        his = [hi for _, hi in bounds]
        return list(executor.map(work, los, his))
