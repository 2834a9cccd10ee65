"""PrimeTable: bit-packed primality map built by the segmented sieve."""

import logging
import time
from functools import partial

import numpy as np
from numpy.typing import NDArray

from ..core.constants import SIEVE_CEILING
from ..core.types import SieveConfig
from ..exceptions import ConfigurationError, SieveRangeError
from .segments import (
    base_primes,
    odd_index_count,
    pack_segment,
    run_segments,
    run_segments_sync,
)

logger = logging.getLogger(__name__)


class PrimeTable:
    """Immutable primality map over [2, limit].

    Only odd numbers are stored, one bit each; 2 is special-cased. Per-segment
    prime counts make prime_count O(segment_size).
    """

    __slots__ = ("_limit", "_bits", "_segment_size", "_cumulative")

    def __init__(
        self,
        limit: int,
        bits: NDArray[np.uint8],
        segment_size: int,
        segment_counts: list[int],
    ) -> None:
        bits.setflags(write=False)
        cumulative = np.zeros(len(segment_counts) + 1, dtype=np.int64)
        np.cumsum(np.asarray(segment_counts, dtype=np.int64), out=cumulative[1:])
        cumulative.setflags(write=False)

        self._limit = limit
        self._bits = bits
        self._segment_size = segment_size
        self._cumulative = cumulative

    @property
    def limit(self) -> int:
        """Get the inclusive upper bound."""
        return self._limit

    def _check_range(self, n: int, what: str) -> None:
        if n > self._limit:
            raise SieveRangeError(
                f"{what} {n} exceeds sieve limit {self._limit}; rebuild with a larger limit"
            )

    def is_prime(self, n: int) -> bool:
        """Check primality of 2 <= n <= limit.

        Raises:
            SieveRangeError: If n < 2 or n > limit
        """
        if n < 2:
            raise SieveRangeError(f"Primality query {n} is below 2")
        self._check_range(n, "Primality query")

        if n == 2:
            return True
        if n % 2 == 0:
            return False

        index = (n - 1) // 2
        return bool((self._bits[index >> 3] >> (7 - (index & 7))) & 1)

    def lookup(self, values: NDArray[np.int64]) -> NDArray[np.bool_]:
        """Vectorised primality for values in [0, limit]; values < 2 map to False."""
        values = np.asarray(values, dtype=np.int64)
        if values.size and int(values.max()) > self._limit:
            raise SieveRangeError(
                f"Value {int(values.max())} exceeds sieve limit {self._limit}"
            )

        odd = (values >= 3) & ((values & 1) == 1)
        index = np.where(odd, (values - 1) // 2, 0)
        bits = (self._bits[index >> 3] >> (7 - (index & 7)).astype(np.uint8)) & 1
        return (values == 2) | (odd & (bits == 1))

    def odd_flags(self, lo: int, hi: int) -> NDArray[np.bool_]:
        """Get primality flags for odd indices [lo, hi), index i meaning 2*i + 1."""
        hi = min(hi, odd_index_count(self._limit))
        if hi <= lo:
            return np.zeros(0, dtype=bool)

        byte_lo = lo >> 3
        byte_hi = (hi + 7) >> 3
        unpacked = np.unpackbits(self._bits[byte_lo:byte_hi])
        start = lo - (byte_lo << 3)
        return unpacked[start : start + hi - lo].astype(bool)

    def primes_up_to(self, y: int) -> NDArray[np.int64]:
        """Get the ascending array of primes <= y."""
        self._check_range(y, "Prime bound")
        if y < 2:
            return np.array([], dtype=np.int64)

        flags = self.odd_flags(0, (y - 1) // 2 + 1)
        odd_primes = 2 * np.flatnonzero(flags).astype(np.int64) + 1
        return np.concatenate((np.array([2], dtype=np.int64), odd_primes))

    def prime_count(self, x: int) -> int:
        """Get pi(x), the number of primes <= x."""
        self._check_range(x, "Count bound")
        if x < 2:
            return 0

        last = (x - 1) // 2
        full = (last + 1) // self._segment_size
        partial_lo = full * self._segment_size
        partial = int(np.count_nonzero(self.odd_flags(partial_lo, last + 1)))
        return 1 + int(self._cumulative[full]) + partial

    def __repr__(self) -> str:
        return f"PrimeTable(limit={self._limit})"


def validate_limit(limit: int) -> None:
    """Validate a requested sieve limit.

    Raises:
        ConfigurationError: If limit is outside [2, SIEVE_CEILING]
    """
    if limit < 2 or limit > SIEVE_CEILING:
        raise ConfigurationError(
            f"Sieve limit must be in [2, {SIEVE_CEILING}], got {limit}"
        )


def assemble_table(
    limit: int, config: SieveConfig, segments: list[tuple[NDArray[np.uint8], int]]
) -> PrimeTable:
    """Concatenate packed segments into a PrimeTable."""
    bits = np.concatenate([packed for packed, _ in segments])
    counts = [count for _, count in segments]
    table = PrimeTable(limit, bits, config.segment_size, counts)
    logger.info(
        "Built prime table limit=%d segments=%d primes=%d",
        limit,
        len(segments),
        1 + sum(counts),
    )
    return table


async def build_table_async(limit: int, config: SieveConfig | None = None) -> PrimeTable:
    """Build a PrimeTable, sieving segments concurrently.

    Args:
        limit: inclusive upper bound, 2 <= limit <= SIEVE_CEILING
        config: sieve configuration

    Returns:
        Immutable PrimeTable

    Raises:
        ConfigurationError: If limit is out of range
    """
    validate_limit(limit)
    config = config or SieveConfig()

    work = partial(pack_segment, odd_primes=base_primes(limit))
    segments = await run_segments(work, odd_index_count(limit), config)
    return assemble_table(limit, config, segments)


def build_table(limit: int, config: SieveConfig | None = None) -> PrimeTable:
    """Build a PrimeTable from synchronous code.

    Args:
        limit: inclusive upper bound, 2 <= limit <= SIEVE_CEILING
        config: sieve configuration

    Returns:
        Immutable PrimeTable

    Raises:
        ConfigurationError: If limit is out of range
    """
    validate_limit(limit)
    config = config or SieveConfig()

    started = time.perf_counter()
    work = partial(pack_segment, odd_primes=base_primes(limit))
    segments = run_segments_sync(work, odd_index_count(limit), config)
    table = assemble_table(limit, config, segments)
    logger.debug("Sieve to %d took %.3fs", limit, time.perf_counter() - started)
    return table


def primes_up_to(table: PrimeTable, y: int) -> NDArray[np.int64]:
    """Get the ascending primes <= y.

    Raises:
        SieveRangeError: If y exceeds the table limit
    """
    return table.primes_up_to(y)


def prime_count(table: PrimeTable, x: int) -> int:
    """Get pi(x).

    Raises:
        SieveRangeError: If x exceeds the table limit
    """
    return table.prime_count(x)
