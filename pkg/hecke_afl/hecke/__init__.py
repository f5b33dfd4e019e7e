from .atomic import (
    atomic_coefficients,
    atomic_phi,
    atomic_phi_symbolic,
    interpolation_degree,
    m_count_polynomial,
)
from .gl import GLHecke, convolve, eta_twist, sat_gl2_fprime, sat_gl2_indicator, sat_gl_minuscule
from .smodule import (
    SModuleElement,
    bc_S_eta,
    bc_S_eta_inverse,
    r_eta_star,
    r_eta_star_combination,
    r_eta_star_indicator,
    tilde_coordinates,
)
from .unitary import (
    UHecke,
    bc,
    chi_rho,
    fbracket_combination,
    fbracket_coordinates,
    format_named,
    phi_combination,
    phi_coordinates,
    qbinom,
    sat_f_bracket,
    sat_u2_f,
    sat_u2_phi,
)

__all__ = [
    "GLHecke",
    "SModuleElement",
    "UHecke",
    "atomic_coefficients",
    "atomic_phi",
    "atomic_phi_symbolic",
    "bc",
    "bc_S_eta",
    "bc_S_eta_inverse",
    "chi_rho",
    "convolve",
    "eta_twist",
    "fbracket_combination",
    "fbracket_coordinates",
    "format_named",
    "interpolation_degree",
    "m_count_polynomial",
    "phi_combination",
    "phi_coordinates",
    "qbinom",
    "r_eta_star",
    "r_eta_star_combination",
    "r_eta_star_indicator",
    "sat_f_bracket",
    "sat_gl2_fprime",
    "sat_gl2_indicator",
    "sat_gl_minuscule",
    "sat_u2_f",
    "sat_u2_phi",
    "tilde_coordinates",
]
