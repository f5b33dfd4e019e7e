from .laurent import QFIELD, LaurentPoly, Q, coerce_coefficient, qlaurent, qlaurent_terms, specialize_coefficient
from .satake import (
    GLSatakeElement,
    USatakeElement,
    elementary_symmetric,
    evaluate,
    gl_generators,
    gl_variables,
    is_signed_symmetric,
    is_symmetric,
    reduce_signed_symmetric,
    reduce_symmetric,
    u_generators,
    u_variables,
    y_variables,
)
from .text import format_laurent, format_qlaurent, parse_laurent
from .univariate import BezoutCertificate, bezout_univariate, gcd_univariate, to_poly

# coefficient ring Q[q, 1/q] sits inside Q(q)
QLaurent = QFIELD

__all__ = [
    "QFIELD",
    "BezoutCertificate",
    "GLSatakeElement",
    "LaurentPoly",
    "Q",
    "QLaurent",
    "USatakeElement",
    "bezout_univariate",
    "coerce_coefficient",
    "elementary_symmetric",
    "evaluate",
    "format_laurent",
    "format_qlaurent",
    "gcd_univariate",
    "gl_generators",
    "gl_variables",
    "is_signed_symmetric",
    "is_symmetric",
    "parse_laurent",
    "qlaurent",
    "qlaurent_terms",
    "reduce_signed_symmetric",
    "reduce_symmetric",
    "specialize_coefficient",
    "to_poly",
    "u_generators",
    "u_variables",
    "y_variables",
]
