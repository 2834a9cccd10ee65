"""Prime Heuristics - Mertens products, singular series and Bateman-Horn constants checked against sieve counts."""

__version__ = "0.1.0"

# Core types
from .core.types import IntPolynomial, OffsetTuple, PolynomialFamily, SieveConfig

# Exceptions
from .exceptions import (
    ConfigurationError,
    DomainError,
    HeuristicsError,
    ParseError,
    PolynomialOverflowError,
    SieveRangeError,
    ValidationError,
)

# Result models
from .models import (
    BatemanHornConstant,
    DensityComparison,
    DependencyTrendRow,
    SingularSeries,
    TruncatedConstant,
)

# Computations
from .operations import (
    bateman_horn_constant,
    bateman_horn_summary,
    conditional_dependency_ratio,
    count_constellations,
    count_prime_values,
    count_prime_values_unbounded,
    dependency_ratio,
    dependency_ratio_product,
    dependency_trend_report,
    empirical_conditional_ratio,
    fixed_prime_divisor,
    is_admissible,
    mertens_product,
    mertens_theorem_check,
    predicted_count_integral,
    residue_count,
    root_count,
    run_comparison,
    singular_series,
    twin_constant_closed_form,
)

# Prime engine
from .sieve import PrimeTable, build_table, build_table_async, is_prime_value

# Parsers
from .utils import parse_offset_tuple, parse_polynomial

__all__ = [
    # Exceptions
    "HeuristicsError",
    "ConfigurationError",
    "ParseError",
    "ValidationError",
    "DomainError",
    "SieveRangeError",
    "PolynomialOverflowError",
    # Core types
    "SieveConfig",
    "OffsetTuple",
    "IntPolynomial",
    "PolynomialFamily",
    # Models
    "TruncatedConstant",
    "SingularSeries",
    "BatemanHornConstant",
    "DensityComparison",
    "DependencyTrendRow",
    # Prime engine
    "PrimeTable",
    "build_table",
    "build_table_async",
    "is_prime_value",
    # Computations
    "mertens_product",
    "dependency_ratio",
    "mertens_theorem_check",
    "residue_count",
    "is_admissible",
    "singular_series",
    "twin_constant_closed_form",
    "dependency_ratio_product",
    "count_constellations",
    "empirical_conditional_ratio",
    "conditional_dependency_ratio",
    "root_count",
    "fixed_prime_divisor",
    "bateman_horn_constant",
    "bateman_horn_summary",
    "count_prime_values",
    "count_prime_values_unbounded",
    "predicted_count_integral",
    "run_comparison",
    "dependency_trend_report",
    # Parsers
    "parse_offset_tuple",
    "parse_polynomial",
]
