"""Bateman-Horn constants for integer polynomial families."""

import logging
import math
from fractions import Fraction
from functools import partial
from typing import Literal

import numpy as np
import sympy
from numpy.typing import NDArray

from ..core.constants import DEFAULT_BRUTE_FORCE_LIMIT, EVALUATION_CEILING, INT64_MAX
from ..core.products import singular_product, vanishing_constant
from ..core.types import IntPolynomial, PolynomialFamily, SieveConfig
from ..exceptions import (
    ConfigurationError,
    DomainError,
    PolynomialOverflowError,
    SieveRangeError,
)
from ..models import BatemanHornConstant, TruncatedConstant
from ..sieve.primality import lookup_values, require_prime
from ..sieve.segments import run_segments, run_segments_sync
from ..sieve.table import PrimeTable

logger = logging.getLogger(__name__)

Irreducibility = Literal["irreducible", "reducible", "asserted", "unverified"]

# Largest modulus whose residue products fit in int64.
BRUTE_FORCE_MODULUS_CEILING = 3_037_000_499


def poly_eval(g: IntPolynomial, x: int) -> int:
    """Evaluate g(x) exactly in Python integers.

    Raises:
        PolynomialOverflowError: If |g(x)| exceeds EVALUATION_CEILING
    """
    result = 0
    for coefficient in reversed(g.coefficients):
        result = result * x + coefficient

    if abs(result) > EVALUATION_CEILING:
        raise PolynomialOverflowError(
            f"{g} at x={x} has magnitude beyond the ceiling {EVALUATION_CEILING}"
        )
    return result


def evaluate_range(g: IntPolynomial, xs: NDArray[np.int64]) -> NDArray[np.int64]:
    """Evaluate g over an ascending array of x >= 0.

    Uses int64 Horner when the value bound fits, exact Python ints otherwise.

    Raises:
        PolynomialOverflowError: If a value exceeds EVALUATION_CEILING
    """
    if xs.size == 0:
        return np.zeros(0, dtype=np.int64)

    if g.value_bound(int(xs[-1])) <= INT64_MAX:
        values = np.zeros(xs.size, dtype=np.int64)
        for coefficient in reversed(g.coefficients):
            values = values * xs + coefficient
        return values

    return np.array([poly_eval(g, x) for x in xs.tolist()], dtype=object)


def residues_mod(g: IntPolynomial, p: int) -> NDArray[np.int64]:
    """Get g(x) mod p for every x in [0, p), reduced at each Horner step."""
    x = np.arange(p, dtype=np.int64)
    values = np.zeros(p, dtype=np.int64)
    for coefficient in reversed(g.coefficients):
        values = (values * x + coefficient % p) % p
    return values


def root_count(family: PolynomialFamily, p: int) -> int:
    """Compute alpha_k(p) by brute force over residues.

    Args:
        family: polynomial family
        p: prime modulus

    Returns:
        Number of x in [0, p) with g_1(x) * ... * g_k(x) = 0 (mod p)

    Raises:
        DomainError: If p is not prime
        ConfigurationError: If p is too large for int64 residue products
    """
    require_prime(p)
    if p > BRUTE_FORCE_MODULUS_CEILING:
        raise ConfigurationError(f"Brute-force root count not supported for p={p}")

    product = np.ones(p, dtype=np.int64)
    for poly in family.polys:
        product = product * residues_mod(poly, p) % p
    return int(np.count_nonzero(product == 0))


def linear_root_count(family: PolynomialFamily, p: int) -> int:
    """Count roots of a linear family mod p from each root -a * b^{-1}."""
    roots: set[int] = set()
    for poly in family.polys:
        a, b = poly.coefficients
        if b % p == 0:
            if a % p == 0:
                return p
            continue
        roots.add(-a * pow(b, -1, p) % p)
    return len(roots)


def root_counts(
    family: PolynomialFamily,
    primes: NDArray[np.int64],
    brute_force_limit: int = DEFAULT_BRUTE_FORCE_LIMIT,
) -> tuple[NDArray[np.int64], int]:
    """Compute alpha_k(p) for ascending primes.

    Primes above brute_force_limit use the exact linear-root formula for
    linear families; for nonlinear families the product stops there.

    Returns:
        (counts, number of primes covered)
    """
    cut = int(np.searchsorted(primes, brute_force_limit, side="right"))
    covered = primes.size if family.is_linear else cut
    counts = np.empty(covered, dtype=np.int64)

    for i, p in enumerate(primes[:cut].tolist()):
        counts[i] = root_count(family, p)
    for i in range(cut, covered):
        counts[i] = linear_root_count(family, int(primes[i]))

    return counts, covered


def fixed_prime_divisor(family: PolynomialFamily) -> int | None:
    """Get the smallest prime dividing every value of the family product.

    Only p <= total degree or p dividing a polynomial's content can qualify.
    """
    candidates = set(sympy.primerange(2, family.total_degree + 1))
    for poly in family.polys:
        candidates.update(sympy.primefactors(poly.content))

    for p in sorted(int(c) for c in candidates):
        if root_count(family, p) == p:
            return p
    return None


def _has_rational_root(g: IntPolynomial) -> bool:
    constant = g.coefficients[0]
    if constant == 0:
        return True

    for numerator in sympy.divisors(abs(constant)):
        for denominator in sympy.divisors(g.leading):
            for sign in (1, -1):
                root = Fraction(sign * int(numerator), int(denominator))
                value = sum(c * root**power for power, c in enumerate(g.coefficients))
                if value == 0:
                    return True
    return False


def irreducibility_status(g: IntPolynomial, asserted: bool = False) -> Irreducibility:
    """Screen a polynomial for irreducibility over the rationals.

    Degree 1 is irreducible; degrees 2-3 are reducible exactly when they
    have a rational root; higher degrees are not verified.
    """
    if g.degree == 1:
        return "irreducible"
    if g.degree <= 3:
        if _has_rational_root(g):
            logger.warning("Polynomial %s has a rational root and is reducible", g)
            return "reducible"
        return "irreducible"
    return "asserted" if asserted else "unverified"


def family_irreducibility(family: PolynomialFamily) -> tuple[Irreducibility, ...]:
    """Screen every polynomial of a family."""
    return tuple(
        irreducibility_status(poly, family.irreducibility_asserted)
        for poly in family.polys
    )


def bateman_horn_constant(
    family: PolynomialFamily,
    table: PrimeTable,
    p_limit: int,
    brute_force_limit: int = DEFAULT_BRUTE_FORCE_LIMIT,
) -> TruncatedConstant:
    """Compute E_k = prod_{p <= p_limit} (1 - alpha_k(p)/p) / (1 - 1/p)^k.

    Args:
        family: polynomial family
        table: prime table covering p_limit
        p_limit: requested truncation bound
        brute_force_limit: largest p whose alpha_k(p) is brute forced

    Returns:
        TruncatedConstant; exactly 0 with vanishing_prime set when a prime
        divides every value

    Raises:
        SieveRangeError: If p_limit exceeds the table limit
    """
    primes = table.primes_up_to(p_limit)

    fixed = fixed_prime_divisor(family)
    if fixed is not None:
        logger.info("Family %s has fixed prime divisor %d", family, fixed)
        return vanishing_constant(p_limit, fixed)

    counts, covered = root_counts(family, primes, brute_force_limit)
    truncation = p_limit
    if covered < primes.size:
        truncation = brute_force_limit
        logger.warning(
            "Nonlinear family %s: truncation stops at %d instead of %d",
            family,
            truncation,
            p_limit,
        )

    constant = singular_product(primes[:covered], counts, family.k, truncation)
    logger.info(
        "Bateman-Horn constant %s: value=%r truncation=%d delta=%.3e",
        family,
        constant.value,
        truncation,
        constant.last_doubling_delta,
    )
    return constant


def predicted_density(family: PolynomialFamily, E: float, x: float) -> float:
    """Get E / (H * ln^k(x)).

    Raises:
        DomainError: If x <= 1 or E < 0
    """
    if x <= 1:
        raise DomainError(f"predicted_density needs x > 1, got {x}")
    if E < 0:
        raise DomainError(f"Constant must be nonnegative, got {E}")
    return E / (family.H * math.log(x) ** family.k)


def bateman_horn_summary(
    family: PolynomialFamily,
    table: PrimeTable,
    p_limit: int,
    brute_force_limit: int = DEFAULT_BRUTE_FORCE_LIMIT,
) -> BatemanHornConstant:
    """Compute E_k together with H, the fixed-divisor flag and irreducibility."""
    return BatemanHornConstant(
        family=str(family),
        k=family.k,
        H=family.H,
        constant=bateman_horn_constant(family, table, p_limit, brute_force_limit),
        irreducibility=family_irreducibility(family),
    )


def _count_values_chunk(
    family: PolynomialFamily,
    table: PrimeTable | None,
    strict: bool,
    lo: int,
    hi: int,
) -> int:
    """Count x in [lo + 1, hi] where every polynomial value is prime."""
    xs = np.arange(lo + 1, hi + 1, dtype=np.int64)
    alive = np.ones(xs.size, dtype=bool)

    for poly in family.polys:
        positions = np.flatnonzero(alive)
        if positions.size == 0:
            break

        values = evaluate_range(poly, xs[positions])
        if strict:
            assert table is not None
            if values.size and values.max() > table.limit:
                raise SieveRangeError(
                    f"{poly} reaches {values.max()} below x={hi}, "
                    f"sieve limit is {table.limit}"
                )
            prime = table.lookup(values.astype(np.int64))
        else:
            prime = lookup_values(values, table)

        alive[positions] = prime

    return int(np.count_nonzero(alive))


def count_prime_values(
    family: PolynomialFamily,
    table: PrimeTable,
    x_limit: int,
    config: SieveConfig | None = None,
) -> int:
    """Count 1 <= x <= x_limit with every g_i(x) prime, by sieve lookup.

    Values below 2 never count.

    Raises:
        SieveRangeError: If a polynomial value exceeds the table limit
        PolynomialOverflowError: If a value exceeds VALUE_CEILING
    """
    config = config or SieveConfig()
    work = partial(_count_values_chunk, family, table, True)
    return sum(run_segments_sync(work, max(x_limit, 0), config))


def count_prime_values_unbounded(
    family: PolynomialFamily,
    x_limit: int,
    table: PrimeTable | None = None,
    config: SieveConfig | None = None,
) -> int:
    """Count like count_prime_values, testing values beyond the sieve individually.

    Raises:
        PolynomialOverflowError: If a value exceeds VALUE_CEILING
    """
    config = config or SieveConfig()
    work = partial(_count_values_chunk, family, table, False)
    return sum(run_segments_sync(work, max(x_limit, 0), config))


async def count_prime_values_async(
    family: PolynomialFamily,
    x_limit: int,
    table: PrimeTable | None = None,
    config: SieveConfig | None = None,
) -> int:
    """Count prime values with x-chunks fanned out concurrently."""
    config = config or SieveConfig()
    work = partial(_count_values_chunk, family, table, False)
    return sum(await run_segments(work, max(x_limit, 0), config))
