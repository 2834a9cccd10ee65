"""Empirical counts against conjectured densities at checkpoints."""

import logging
import math
from collections.abc import Iterable

import numpy as np
from scipy import integrate, special

from ..core.constants import (
    DEFAULT_BRUTE_FORCE_LIMIT,
    DEFAULT_REL_TOL,
    DEFAULT_TRUNCATION_LIMIT,
    HALF_E_GAMMA,
)
from ..core.types import OffsetTuple, PolynomialFamily, SieveConfig
from ..exceptions import DomainError, SieveRangeError
from ..models import DensityComparison, DependencyTrendRow, TruncatedConstant
from ..sieve.table import PrimeTable
from .bateman_horn import bateman_horn_constant, count_prime_values_unbounded
from .constellations import count_constellations, singular_series
from .mertens import dependency_ratio, sqrt_bound

logger = logging.getLogger(__name__)

# Quadrature runs over [2, 20], [20, 200], ... so each piece stays well conditioned.
PIECE_RATIO = 10.0
QUAD_SUBINTERVALS = 200


def _inverse_log_power(t: float, k: int) -> float:
    return float(math.log(t) ** -k)


def log_power_integral(k: int, x: float, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """Integrate dt / ln^k(t) over [2, x] by adaptive quadrature.

    Args:
        k: power of the logarithm, >= 1
        x: upper limit, >= 2
        rel_tol: relative tolerance passed to each quadrature piece

    Returns:
        The integral, summed over geometric pieces with math.fsum
    """
    pieces = []
    lo = 2.0
    while lo < x:
        hi = min(lo * PIECE_RATIO, x)
        value, _ = integrate.quad(
            _inverse_log_power,
            lo,
            hi,
            args=(k,),
            epsabs=0.0,
            epsrel=rel_tol,
            limit=QUAD_SUBINTERVALS,
        )
        pieces.append(value)
        lo = hi
    return math.fsum(pieces)


def logarithmic_integral(x: float) -> float:
    """Get li(x) = Ei(ln x) for x > 1.

    Raises:
        DomainError: If x <= 1
    """
    if x <= 1:
        raise DomainError(f"logarithmic_integral needs x > 1, got {x}")
    return float(special.expi(math.log(x)))


def predicted_count_integral(
    constant: float, k: int, x: float, rel_tol: float = DEFAULT_REL_TOL
) -> float:
    """Get constant * integral_2^x dt / ln^k(t).

    Args:
        constant: singular-series constant (already divided by H for families)
        k: number of simultaneous prime conditions
        x: upper limit
        rel_tol: quadrature relative tolerance

    Returns:
        Predicted count; exactly 0.0 for a zero constant

    Raises:
        DomainError: If x < 2, k < 1 or constant < 0
    """
    if x < 2:
        raise DomainError(f"predicted_count_integral needs x >= 2, got {x}")
    if k < 1:
        raise DomainError(f"predicted_count_integral needs k >= 1, got {k}")
    if constant < 0:
        raise DomainError(f"Constant must be nonnegative, got {constant}")
    if constant == 0:
        return 0.0
    return constant * log_power_integral(k, x, rel_tol)


def normalize_checkpoints(checkpoints: Iterable[int]) -> list[int]:
    """Sort and deduplicate checkpoints."""
    return sorted({int(x) for x in checkpoints})


def _comparison_row(
    x: int,
    empirical: int,
    constant: TruncatedConstant,
    density_constant: float,
    k: int,
) -> DensityComparison:
    predicted = predicted_count_integral(density_constant, k, x)
    ratio = empirical / predicted if predicted > 0 else None
    if ratio is None:
        logger.warning("Predicted count at x=%d is 0; ratio undefined", x)

    return DensityComparison(
        x=x,
        empirical_count=empirical,
        predicted_count=predicted,
        ratio=ratio,
        constant_used=constant.value,
        truncation_limit=constant.truncation_limit,
    )


def run_comparison(
    target: OffsetTuple | PolynomialFamily,
    table: PrimeTable,
    checkpoints: Iterable[int],
    p_limit: int | None = None,
    brute_force_limit: int = DEFAULT_BRUTE_FORCE_LIMIT,
    config: SieveConfig | None = None,
    constant: TruncatedConstant | None = None,
) -> list[DensityComparison]:
    """Compare empirical and predicted counts at each checkpoint.

    Tuples are counted by sieve lookup and predicted with D_k; families are
    counted with per-value primality past the sieve and predicted with E_k/H.

    Args:
        target: offset tuple or polynomial family
        table: prime table
        checkpoints: x values, each >= 2
        p_limit: truncation of the constant, default min(table.limit, 10^6)
        brute_force_limit: largest p whose residue count is brute forced
        config: fan-out configuration for counting
        constant: precomputed D_k or E_k, computed here when omitted

    Returns:
        One row per distinct checkpoint, ascending in x

    Raises:
        SieveRangeError: If a tuple checkpoint needs more sieve
        DomainError: If a checkpoint is below 2
    """
    xs = normalize_checkpoints(checkpoints)
    if p_limit is None:
        p_limit = min(table.limit, DEFAULT_TRUNCATION_LIMIT)

    rows = []
    if isinstance(target, OffsetTuple):
        if constant is None:
            constant = singular_series(
                target, table, p_limit, brute_force_limit
            ).constant
        for x in xs:
            empirical = count_constellations(table, target, x, config)
            rows.append(_comparison_row(x, empirical, constant, constant.value, target.k))
    else:
        if constant is None:
            constant = bateman_horn_constant(
                target, table, p_limit, brute_force_limit
            )
        for x in xs:
            empirical = count_prime_values_unbounded(target, x, table, config)
            rows.append(
                _comparison_row(
                    x, empirical, constant, constant.value / target.H, target.k
                )
            )

    for row in rows:
        logger.info(
            "Comparison %s x=%d empirical=%d predicted=%.6g",
            target,
            row.x,
            row.empirical_count,
            row.predicted_count,
        )
    return rows


def dependency_trend_report(
    table: PrimeTable, checkpoints: Iterable[int]
) -> list[DependencyTrendRow]:
    """Measure C1(x) and its distance from 0.5 e^gamma at each checkpoint.

    Raises:
        SieveRangeError: If sqrt of the largest checkpoint exceeds the table limit
        DomainError: If a checkpoint is below 4
    """
    xs = normalize_checkpoints(checkpoints)
    if xs and sqrt_bound(xs[-1]) > table.limit:
        raise SieveRangeError(
            f"Checkpoint {xs[-1]} needs primes up to {sqrt_bound(xs[-1])}, "
            f"sieve limit is {table.limit}"
        )

    rows = []
    for x in xs:
        ratio = dependency_ratio(table, x)
        rows.append(
            DependencyTrendRow(
                x=x, dependency_ratio=ratio, abs_error=abs(ratio - HALF_E_GAMMA)
            )
        )
        logger.debug("Dependency ratio x=%d ratio=%r", x, ratio)
    return rows


def errors_nonincreasing(rows: list[DependencyTrendRow]) -> bool:
    """Check that absolute errors never grow along the checkpoint ladder."""
    errors = np.array([row.abs_error for row in rows], dtype=np.float64)
    return bool(np.all(np.diff(errors) <= 0))
