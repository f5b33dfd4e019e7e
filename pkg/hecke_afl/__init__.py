"""Exact spherical Hecke algebra calculus and the U(1) x U(2) FL/AFL verification harness."""
from .exceptions import (
    BudgetExceededError,
    HeckeAflError,
    InvalidInputError,
    PrecisionError,
    UnimplementedRegimeError,
)
from .localfield import FieldElement, PrimeConfig

__all__ = [
    "BudgetExceededError",
    "FieldElement",
    "HeckeAflError",
    "InvalidInputError",
    "PrecisionError",
    "PrimeConfig",
    "UnimplementedRegimeError",
]
