"""One-variable polynomial utilities over Q."""
from __future__ import annotations

from dataclasses import dataclass

from sympy import QQ, Poly, Symbol

from ..exceptions import InvalidInputError
from .laurent import Q, LaurentPoly


def to_poly(poly: LaurentPoly) -> Poly:
    """sympy Poly over QQ for a one-variable polynomial with numeric coefficients."""
    if poly.nvars != 1:
        raise InvalidInputError(f"expected a polynomial in one variable, got {poly.names}")
    if poly.min_exponent() < 0:
        raise InvalidInputError("negative exponents are not allowed here")
    var = Symbol(poly.names[0])
    coeffs = {}
    for (exp,), coeff in poly.items():
        expr = poly.domain.to_sympy(coeff)
        if Q in expr.free_symbols:
            raise InvalidInputError("specialize q before univariate arithmetic")
        coeffs[(exp,)] = expr
    return Poly.from_dict(coeffs, var, domain=QQ) if coeffs else Poly(0, var, domain=QQ)


def from_poly(poly: Poly, like: LaurentPoly) -> LaurentPoly:
    terms = {exp: like.domain.from_sympy(coeff) for exp, coeff in poly.as_dict(native=False).items()}
    return LaurentPoly(like.names, terms, like.domain)


def gcd_univariate(left: LaurentPoly, right: LaurentPoly) -> LaurentPoly:
    """Monic gcd over Q.

    Raises:
        InvalidInputError: when either input is zero.
    """
    if not left or not right:
        raise InvalidInputError("gcd of a zero polynomial")
    return from_poly(to_poly(left).gcd(to_poly(right)).monic(), left)


@dataclass(frozen=True)
class BezoutCertificate:
    """s*left + t*right = gcd."""

    s: LaurentPoly
    t: LaurentPoly
    gcd: LaurentPoly

    def verify(self, left: LaurentPoly, right: LaurentPoly) -> bool:
        return self.s * left + self.t * right == self.gcd


def bezout_univariate(left: LaurentPoly, right: LaurentPoly) -> BezoutCertificate:
    if not left or not right:
        raise InvalidInputError("gcdex of a zero polynomial")
    s, t, h = to_poly(left).gcdex(to_poly(right))
    return BezoutCertificate(from_poly(s, left), from_poly(t, left), from_poly(h, left))
