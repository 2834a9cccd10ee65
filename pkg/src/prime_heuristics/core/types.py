"""Type definitions for prime heuristics computations."""

import math
from dataclasses import dataclass

from ..exceptions import ConfigurationError, ValidationError
from .constants import DEFAULT_SEGMENT_SIZE


@dataclass(frozen=True)
class SieveConfig:
    """Sieve and fan-out configuration."""

    segment_size: int = DEFAULT_SEGMENT_SIZE
    threads: int = 1

    def __post_init__(self) -> None:
        if self.segment_size < 8 or self.segment_size % 8 != 0:
            raise ConfigurationError(
                f"segment_size must be a positive multiple of 8, got {self.segment_size}"
            )
        if self.threads < 1:
            raise ConfigurationError(f"threads must be >= 1, got {self.threads}")


@dataclass(frozen=True)
class OffsetTuple:
    """Prime-constellation pattern: sorted distinct even offsets starting at 0."""

    offsets: tuple[int, ...]

    def __post_init__(self) -> None:
        offsets = tuple(int(offset) for offset in self.offsets)
        object.__setattr__(self, "offsets", offsets)

        if not offsets:
            raise ValidationError("Offset tuple must contain at least one offset")
        if offsets[0] != 0:
            raise ValidationError(f"First offset must be 0, got {offsets[0]}")

        odd = [offset for offset in offsets if offset % 2]
        if odd:
            raise ValidationError(f"Offsets must be even, got odd offsets {odd}")

        if any(b <= a for a, b in zip(offsets, offsets[1:], strict=False)):
            raise ValidationError(f"Offsets must be strictly increasing: {offsets}")

    @classmethod
    def twin(cls) -> "OffsetTuple":
        """Get the twin-prime pattern (0, 2)."""
        return cls((0, 2))

    @property
    def k(self) -> int:
        """Get tuple size."""
        return len(self.offsets)

    @property
    def max_offset(self) -> int:
        """Get the largest offset."""
        return self.offsets[-1]

    @property
    def prefix(self) -> "OffsetTuple":
        """Get the tuple without its last offset."""
        if self.k < 2:
            raise ValidationError("A 1-tuple has no prefix")
        return OffsetTuple(self.offsets[:-1])

    def __str__(self) -> str:
        return ",".join(str(offset) for offset in self.offsets)


def _format_term(coefficient: int, power: int, first: bool) -> str:
    sign = "-" if coefficient < 0 else ("" if first else "+")
    magnitude = abs(coefficient)

    if power == 0:
        return f"{sign}{magnitude}"

    body = "x" if power == 1 else f"x^{power}"
    if magnitude == 1:
        return f"{sign}{body}"
    return f"{sign}{magnitude}{body}"


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial, constant term first."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coefficients = [int(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()

        if len(coefficients) < 2:
            raise ValidationError(
                f"Polynomial must have degree >= 1, got coefficients {self.coefficients}"
            )
        if coefficients[-1] < 0:
            raise ValidationError(
                f"Leading coefficient must be positive, got {coefficients[-1]}"
            )

        object.__setattr__(self, "coefficients", tuple(coefficients))

    @property
    def degree(self) -> int:
        """Get polynomial degree."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        """Get leading coefficient."""
        return self.coefficients[-1]

    @property
    def content(self) -> int:
        """Get gcd of all coefficients."""
        return math.gcd(*self.coefficients)

    def value_bound(self, x_max: int) -> int:
        """Get an upper bound on |g(x)| for 0 <= x <= x_max."""
        x_max = max(x_max, 0)
        return sum(abs(c) * x_max**power for power, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            coefficient = self.coefficients[power]
            if coefficient == 0:
                continue
            terms.append(_format_term(coefficient, power, first=not terms))
        return "".join(terms)


@dataclass(frozen=True)
class PolynomialFamily:
    """Nonempty family of polynomials evaluated simultaneously."""

    polys: tuple[IntPolynomial, ...]
    irreducibility_asserted: bool = False

    def __post_init__(self) -> None:
        polys = tuple(self.polys)
        if not polys:
            raise ValidationError("Polynomial family must not be empty")
        object.__setattr__(self, "polys", polys)

    @classmethod
    def from_offsets(cls, tuple_: OffsetTuple) -> "PolynomialFamily":
        """Build the linear family {x + o} for every offset o."""
        return cls(tuple(IntPolynomial((offset, 1)) for offset in tuple_.offsets))

    @property
    def k(self) -> int:
        """Get family size."""
        return len(self.polys)

    @property
    def H(self) -> int:
        """Get the product of degrees."""
        return math.prod(poly.degree for poly in self.polys)

    @property
    def total_degree(self) -> int:
        """Get the degree of the product polynomial."""
        return sum(poly.degree for poly in self.polys)

    @property
    def is_linear(self) -> bool:
        """Check whether every polynomial has degree 1."""
        return all(poly.degree == 1 for poly in self.polys)

    def value_bound(self, x_max: int) -> int:
        """Get the largest per-polynomial value bound on [0, x_max]."""
        return max(poly.value_bound(x_max) for poly in self.polys)

    def __str__(self) -> str:
        return " ".join(str(poly) for poly in self.polys)
