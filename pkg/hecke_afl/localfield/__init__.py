from ..constants import VAL_INFINITY
from .config import PrimeConfig, smallest_nonresidue
from .element import (
    FieldElement,
    determinant,
    eta,
    eta_tilde_det,
    format_fraction,
    rational_valuation,
    val,
)
from .truncated import TruncatedElement, reduce_rational, solve_norm

__all__ = [
    "VAL_INFINITY",
    "FieldElement",
    "PrimeConfig",
    "TruncatedElement",
    "determinant",
    "eta",
    "eta_tilde_det",
    "format_fraction",
    "rational_valuation",
    "reduce_rational",
    "smallest_nonresidue",
    "solve_norm",
    "val",
]
