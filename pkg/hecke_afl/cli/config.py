"""Run configuration shared by every subcommand."""
from __future__ import annotations

from dataclasses import dataclass

from ..constants import DEFAULT_PRECISION, DEFAULT_PRIME, DEFAULT_SEED, MIN_CLI_PRECISION
from ..exceptions import InvalidInputError
from ..localfield import PrimeConfig

FORMATS = ("json", "table")
LOG_FORMATS = ("json", "kv")


@dataclass(frozen=True)
class CliConfig:
    """Attributes:
        p: Odd prime.
        precision: Working precision N for norm equations, at least 8.
        seed: Seed for every sampler.
        format: ``json`` or ``table``.
        out: Output file; stdout when None.
    """

    p: int = DEFAULT_PRIME
    precision: int = DEFAULT_PRECISION
    seed: int = DEFAULT_SEED
    format: str = "json"
    out: str | None = None
    log_level: str = "warning"
    log_file: str | None = None
    log_format: str = "json"

    def __post_init__(self) -> None:
        if self.precision < MIN_CLI_PRECISION:
            raise InvalidInputError(f"precision must be at least {MIN_CLI_PRECISION}, got {self.precision}")
        if self.format not in FORMATS:
            raise InvalidInputError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.log_format not in LOG_FORMATS:
            raise InvalidInputError(f"log format must be one of {LOG_FORMATS}, got {self.log_format!r}")
        # validates p
        self.prime_config()

    def prime_config(self) -> PrimeConfig:
        return PrimeConfig(p=self.p, precision=self.precision)
