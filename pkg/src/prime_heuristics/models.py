"""Data models for computed constants and report rows."""

from pydantic import BaseModel, ConfigDict, Field


class TruncatedConstant(BaseModel):
    """Infinite prime product truncated at p <= truncation_limit."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(..., ge=0)
    truncation_limit: int = Field(..., ge=1)
    last_doubling_delta: float = Field(
        ..., ge=0, description="|value(P) - value(P/2)| / value(P)"
    )

    # Set when a factor vanishes and the product is exactly 0
    vanishing_prime: int | None = None


class SingularSeries(BaseModel):
    """Singular-series constant for an offset tuple."""

    model_config = ConfigDict(frozen=True)

    offsets: tuple[int, ...]
    constant: TruncatedConstant
    admissible: bool

    @property
    def k(self) -> int:
        return len(self.offsets)


class DensityComparison(BaseModel):
    """One checkpoint of empirical vs. predicted counting."""

    model_config = ConfigDict(frozen=True)

    x: int
    empirical_count: int = Field(..., ge=0)
    predicted_count: float = Field(..., ge=0)
    ratio: float | None = Field(
        default=None, description="empirical/predicted; None when predicted is 0"
    )
    constant_used: float = Field(..., ge=0)
    truncation_limit: int

    @property
    def flagged(self) -> bool:
        """Check whether the ratio is undefined."""
        return self.ratio is None


class DependencyTrendRow(BaseModel):
    """Dependency ratio measured at one checkpoint."""

    model_config = ConfigDict(frozen=True)

    x: int
    dependency_ratio: float
    abs_error: float = Field(..., ge=0, description="|ratio - 0.5e^gamma|")


class BatemanHornConstant(BaseModel):
    """Bateman-Horn constant of a polynomial family with its metadata."""

    model_config = ConfigDict(frozen=True)

    family: str
    k: int = Field(..., ge=1)
    H: int = Field(..., ge=1, description="product of degrees")
    constant: TruncatedConstant
    irreducibility: tuple[str, ...]

    @property
    def fixed_divisor(self) -> int | None:
        """Get the prime dividing every value, if the constant vanishes."""
        return self.constant.vanishing_prime
