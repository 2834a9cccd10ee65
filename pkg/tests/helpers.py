"""Slow but obviously correct oracles used to check the fast paths."""

import math
import random


def trial_division_is_prime(n: int) -> bool:
    """Check primality by trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def trial_division_primes(limit: int) -> list[int]:
    """List primes <= limit by trial division."""
    return [n for n in range(2, limit + 1) if trial_division_is_prime(n)]


def oracle_residue_count(offsets: tuple[int, ...], p: int) -> int:
    """Count x mod p hitting some x + offset = 0 (mod p), in pure Python."""
    return sum(1 for x in range(p) if any((x + o) % p == 0 for o in offsets))


def evaluate(coefficients: tuple[int, ...], x: int) -> int:
    """Evaluate a constant-first coefficient tuple at x."""
    return sum(c * x**power for power, c in enumerate(coefficients))


def oracle_root_count(polys: list[tuple[int, ...]], p: int) -> int:
    """Count x mod p where some polynomial vanishes mod p, in pure Python."""
    return sum(1 for x in range(p) if any(evaluate(g, x) % p == 0 for g in polys))


def oracle_constellation_count(offsets: tuple[int, ...], x_limit: int) -> int:
    """Count x <= x_limit with every x + offset prime, by trial division."""
    return sum(
        1
        for x in range(1, x_limit + 1)
        if all(trial_division_is_prime(x + o) for o in offsets)
    )


def random_tuple(rng: random.Random, max_k: int = 5, max_offset: int = 40) -> tuple[int, ...]:
    """Draw a valid offset tuple with 1 <= k <= max_k."""
    k = rng.randint(1, max_k)
    evens = rng.sample(range(2, max_offset + 1, 2), k - 1)
    return (0, *sorted(evens))


def random_polynomial(
    rng: random.Random, max_degree: int = 4, bound: int = 50
) -> tuple[int, ...]:
    """Draw constant-first coefficients with a positive leading coefficient."""
    degree = rng.randint(1, max_degree)
    lower = [rng.randint(-bound, bound) for _ in range(degree)]
    return (*lower, rng.randint(1, bound))
