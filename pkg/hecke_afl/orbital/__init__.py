from .integrals import (
    CLOSED,
    ORACLE,
    OrbitalValue,
    derivative_at_0,
    homogeneous_lift,
    homogeneous_orb_oracle,
    iwasawa_weight,
    orb_S,
    orb_S_closed,
    orb_S_combination,
    orb_S_oracle,
    orb_S_tilde,
    orb_U_support,
    orbit_record,
    symmetric_image,
    value_at_0,
)
from .orbits import (
    NONSPLIT,
    SPLIT,
    SOrbit,
    UOrbit,
    make_gamma,
    match_class,
    matched_unitary,
    sample_orbit,
    transfer_factor,
)

__all__ = [
    "CLOSED",
    "NONSPLIT",
    "ORACLE",
    "SPLIT",
    "OrbitalValue",
    "SOrbit",
    "UOrbit",
    "derivative_at_0",
    "homogeneous_lift",
    "homogeneous_orb_oracle",
    "iwasawa_weight",
    "make_gamma",
    "match_class",
    "matched_unitary",
    "orb_S",
    "orb_S_closed",
    "orb_S_combination",
    "orb_S_oracle",
    "orb_S_tilde",
    "orb_U_support",
    "orbit_record",
    "sample_orbit",
    "symmetric_image",
    "transfer_factor",
    "value_at_0",
]
