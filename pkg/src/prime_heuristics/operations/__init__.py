"""Heuristic constants, counting and density reports."""

from .bateman_horn import (
    bateman_horn_constant,
    bateman_horn_summary,
    count_prime_values,
    count_prime_values_async,
    count_prime_values_unbounded,
    family_irreducibility,
    fixed_prime_divisor,
    irreducibility_status,
    poly_eval,
    predicted_density,
    root_count,
)
from .constellations import (
    conditional_dependency_ratio,
    conditional_factor,
    conditional_probability_estimate,
    count_constellations,
    count_constellations_async,
    dependency_ratio_product,
    empirical_conditional_ratio,
    is_admissible,
    residue_count,
    singular_series,
    twin_constant_closed_form,
)
from .density_report import (
    dependency_trend_report,
    errors_nonincreasing,
    logarithmic_integral,
    predicted_count_integral,
    run_comparison,
)
from .mertens import (
    dependency_ratio,
    heuristic_density,
    mertens_envelope,
    mertens_product,
    mertens_theorem_check,
)

__all__ = [
    # mertens
    "mertens_product",
    "heuristic_density",
    "dependency_ratio",
    "mertens_theorem_check",
    "mertens_envelope",
    # constellations
    "residue_count",
    "is_admissible",
    "singular_series",
    "twin_constant_closed_form",
    "conditional_factor",
    "conditional_probability_estimate",
    "dependency_ratio_product",
    "count_constellations",
    "count_constellations_async",
    "empirical_conditional_ratio",
    "conditional_dependency_ratio",
    # bateman_horn
    "poly_eval",
    "root_count",
    "fixed_prime_divisor",
    "irreducibility_status",
    "family_irreducibility",
    "bateman_horn_constant",
    "bateman_horn_summary",
    "predicted_density",
    "count_prime_values",
    "count_prime_values_unbounded",
    "count_prime_values_async",
    # density_report
    "predicted_count_integral",
    "logarithmic_integral",
    "run_comparison",
    "dependency_trend_report",
    "errors_nonincreasing",
]
