"""Named constants shared across the package."""

import math
from dataclasses import dataclass

EULER_GAMMA = 0.57721566490153286
HALF_E_GAMMA = math.exp(EULER_GAMMA) / 2

# Largest sieve limit accepted by build_table.
SIEVE_CEILING = 4 * 10**9

# Polynomial values must stay below this so 64-bit primality stays deterministic.
VALUE_CEILING = 2**64 - 1

# Exact evaluation bound; degree 8 at x = 10^9 reaches about 10^72.
EVALUATION_CEILING = 10**100
INT64_MAX = 2**63 - 1

DEFAULT_SEGMENT_SIZE = 1 << 20
DEFAULT_BRUTE_FORCE_LIMIT = 10**5
DEFAULT_TRUNCATION_LIMIT = 10**6
DEFAULT_REL_TOL = 1e-9


@dataclass(frozen=True)
class Constants:
    """Store of the named real constants."""

    euler_gamma: float = EULER_GAMMA

    @property
    def half_e_gamma(self) -> float:
        """Get 0.5 * e^gamma, the limiting dependency ratio."""
        return math.exp(self.euler_gamma) / 2


CONSTANTS = Constants()
