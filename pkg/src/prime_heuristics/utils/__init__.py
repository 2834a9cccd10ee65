"""Input parsers and report writers."""

from .output import (
    ReportSection,
    comparison_section,
    render,
    trend_section,
)
from .parsing import (
    parse_int_list,
    parse_offset_tuple,
    parse_polynomial,
    parse_scientific_int,
)

__all__ = [
    "parse_scientific_int",
    "parse_int_list",
    "parse_offset_tuple",
    "parse_polynomial",
    "ReportSection",
    "comparison_section",
    "trend_section",
    "render",
]
