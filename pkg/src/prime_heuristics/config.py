"""Run configuration resolved from command-line flags."""

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .core.constants import DEFAULT_BRUTE_FORCE_LIMIT, DEFAULT_SEGMENT_SIZE
from .core.types import SieveConfig
from .exceptions import ConfigurationError
from .utils.output import OutputFormat


class RunConfig(BaseModel):
    """Resolved settings for one CLI invocation."""

    model_config = ConfigDict(frozen=True)

    sieve_limit: int = Field(..., ge=2)
    truncation_limit: int = Field(..., ge=2)
    checkpoints: list[int] = Field(default_factory=list)
    output_format: OutputFormat = "text"
    output_path: Path | None = None
    threads: int = Field(default=1, ge=1)
    segment_size: int = Field(default=DEFAULT_SEGMENT_SIZE, ge=8)
    brute_force_limit: int = Field(default=DEFAULT_BRUTE_FORCE_LIMIT, ge=2)

    @field_validator("checkpoints")
    @classmethod
    def sort_checkpoints(cls, v: list[int]) -> list[int]:
        """Keep checkpoints ascending without duplicates."""
        return sorted(set(v))

    @classmethod
    def build(cls, **settings: object) -> "RunConfig":
        """Create a config, reporting every violation as ConfigurationError.

        Raises:
            ConfigurationError: If a field is invalid or truncation_limit
                exceeds sieve_limit
        """
        try:
            config = cls.model_validate(settings)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid run configuration: {e}") from e

        if config.truncation_limit > config.sieve_limit:
            raise ConfigurationError(
                f"truncation limit {config.truncation_limit} exceeds "
                f"sieve limit {config.sieve_limit}"
            )
        # segment size must pack into whole bytes
        SieveConfig(segment_size=config.segment_size, threads=config.threads)
        return config

    @property
    def sieve_config(self) -> SieveConfig:
        """Get the sieve fan-out configuration."""
        return SieveConfig(segment_size=self.segment_size, threads=self.threads)
