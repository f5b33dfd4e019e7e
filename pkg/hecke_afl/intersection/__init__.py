from .degrees import degree_Tm, degree_cross_check, divisor_degrees, hecke_degree, quasi_canonical_degree
from .pairing import (
    FundamentalMatrix,
    IntersectionResult,
    fundamental_invariants,
    fundamental_matrix,
    int_g_phi,
    int_g_phi_at,
    kr_pairing,
)

__all__ = [
    "FundamentalMatrix",
    "IntersectionResult",
    "degree_Tm",
    "degree_cross_check",
    "divisor_degrees",
    "fundamental_invariants",
    "fundamental_matrix",
    "hecke_degree",
    "int_g_phi",
    "int_g_phi_at",
    "kr_pairing",
    "quasi_canonical_degree",
]
