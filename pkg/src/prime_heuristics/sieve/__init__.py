"""Prime engine: segmented sieve, PrimeTable and value primality."""

from .primality import is_prime_value, lookup_values, require_prime
from .table import (
    PrimeTable,
    build_table,
    build_table_async,
    prime_count,
    primes_up_to,
)

__all__ = [
    "PrimeTable",
    "build_table",
    "build_table_async",
    "primes_up_to",
    "prime_count",
    "is_prime_value",
    "lookup_values",
    "require_prime",
]
