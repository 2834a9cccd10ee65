"""Core types, constants and product accumulation."""

from .constants import CONSTANTS, EULER_GAMMA, HALF_E_GAMMA, Constants
from .products import singular_product, truncated_constant
from .types import IntPolynomial, OffsetTuple, PolynomialFamily, SieveConfig

__all__ = [
    "CONSTANTS",
    "Constants",
    "EULER_GAMMA",
    "HALF_E_GAMMA",
    "IntPolynomial",
    "OffsetTuple",
    "PolynomialFamily",
    "SieveConfig",
    "singular_product",
    "truncated_constant",
]
