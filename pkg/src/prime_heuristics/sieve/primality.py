"""Primality of individual values, inside or beyond the sieve."""

import numpy as np
import sympy
from numpy.typing import NDArray

from ..core.constants import VALUE_CEILING
from ..exceptions import DomainError, PolynomialOverflowError
from .table import PrimeTable

# Small primes used to discard most composites before the per-value test.
PREFILTER_PRIMES = tuple(int(p) for p in sympy.primerange(2, 1000))


def require_prime(p: int) -> None:
    """Check that a modulus is prime.

    Raises:
        DomainError: If p is not prime
    """
    if p < 2 or not sympy.isprime(p):
        raise DomainError(f"Modulus must be prime, got {p}")


def is_prime_value(n: int, table: PrimeTable | None = None) -> bool:
    """Deterministic primality for any 0 <= n <= VALUE_CEILING.

    Args:
        n: value to test
        table: sieve to consult when n lies inside it

    Returns:
        True if n is prime; values below 2 are never prime

    Raises:
        PolynomialOverflowError: If n exceeds VALUE_CEILING
    """
    if n < 2:
        return False
    if n > VALUE_CEILING:
        raise PolynomialOverflowError(
            f"Value {n} exceeds the deterministic primality ceiling {VALUE_CEILING}"
        )
    if table is not None and n <= table.limit:
        return table.is_prime(n)
    return bool(sympy.isprime(n))


def prefilter(values: NDArray[np.int64]) -> NDArray[np.bool_]:
    """Mark values that survive division by small primes.

    A value equal to a small prime survives; any other multiple does not.
    """
    survivors = np.ones(values.shape, dtype=bool)
    for p in PREFILTER_PRIMES:
        survivors &= np.asarray((values % p != 0) | (values == p), dtype=bool)
    return survivors


def lookup_values(
    values: NDArray[np.int64], table: PrimeTable | None
) -> NDArray[np.bool_]:
    """Vectorised primality, falling back to sympy beyond the sieve.

    Args:
        values: integers to test (int64, or object dtype for wide values)
        table: sieve used for values within its limit

    Returns:
        Boolean mask of prime values

    Raises:
        PolynomialOverflowError: If a value exceeds VALUE_CEILING
    """
    result = np.zeros(values.shape, dtype=bool)
    if values.size and values.max() > VALUE_CEILING:
        raise PolynomialOverflowError(
            f"Value {values.max()} exceeds the deterministic primality "
            f"ceiling {VALUE_CEILING}"
        )
    candidates = values >= 2

    inside = np.zeros(values.shape, dtype=bool)
    if table is not None:
        inside = candidates & (values <= table.limit)
        if inside.any():
            result[inside] = table.lookup(values[inside].astype(np.int64))

    outside = candidates & ~inside
    if outside.any():
        positions = np.flatnonzero(outside)
        survivors = positions[prefilter(values[positions])]
        for position in survivors.tolist():
            result[position] = is_prime_value(int(values[position]))

    return result
