"""Orbital integrals on S_2 as Laurent polynomials in Z = q^{-s}.

Haar measures give O_{F_0}^x and O_{F_0} volume 1.  The K'-orbit of a point
of S_2(F_0) is K' t_i with i = -(minimum entry valuation).
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

import structlog
from sympy import ZZ

from ..constants import ORBITAL_VARIABLE
from ..exceptions import CriteriaDisagreeError, InvalidInputError, NotNormalizedError, VerificationError
from ..hecke import SModuleElement, bc_S_eta_inverse, r_eta_star
from ..localfield import FieldElement, PrimeConfig, eta_tilde_det, format_fraction
from ..logging_utils import LogTagging, LogType
from ..symfun import LaurentPoly, format_laurent
from .orbits import Matrix, SOrbit, UOrbit, transfer_factor

logger = structlog.get_logger(__name__)
_tags = LogTagging({"component": "orbital"})

_NAMES = (ORBITAL_VARIABLE,)

CLOSED = "closed"
ORACLE = "oracle"


@dataclass(frozen=True, eq=False)
class OrbitalValue:
    """sum_k c_k Z^k with integer coefficients."""

    laurent: LaurentPoly

    @classmethod
    def from_coefficients(cls, coefficients: dict[int, Any]) -> OrbitalValue:
        terms = {}
        for k, c in coefficients.items():
            c = Fraction(c)
            if c.denominator != 1:
                raise InvalidInputError(f"orbital integral coefficient {c} is not an integer")
            terms[(k,)] = int(c)
        return cls(LaurentPoly(_NAMES, terms, ZZ))

    @classmethod
    def zero(cls) -> OrbitalValue:
        return cls(LaurentPoly.zero(_NAMES, ZZ))

    def coefficients(self) -> dict[int, int]:
        return {mono[0]: int(coeff) for mono, coeff in self.laurent.items()}

    def __add__(self, other: OrbitalValue) -> OrbitalValue:
        return OrbitalValue(self.laurent + other.laurent)

    def __neg__(self) -> OrbitalValue:
        return OrbitalValue(-self.laurent)

    def __sub__(self, other: OrbitalValue) -> OrbitalValue:
        return OrbitalValue(self.laurent - other.laurent)

    def scale(self, factor: int) -> OrbitalValue:
        return OrbitalValue(self.laurent * factor)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrbitalValue):
            return NotImplemented
        return self.laurent == other.laurent

    def __hash__(self) -> int:
        return hash(self.laurent)

    def __bool__(self) -> bool:
        return bool(self.laurent)

    def substitute_square(self) -> OrbitalValue:
        """Z -> Z^2, i.e. s -> 2s."""
        return OrbitalValue(self.laurent.map_monomials(lambda mono: (2 * mono[0],)))

    def value_at_0(self) -> Fraction:
        return Fraction(sum(self.coefficients().values()))

    def derivative_at_0(self) -> Fraction:
        """d/ds at s = 0 as a multiple of log q: -sum k c_k."""
        return Fraction(-sum(k * c for k, c in self.coefficients().items()))

    def __str__(self) -> str:
        return format_laurent(self.laurent)

    def as_dict(self) -> dict[str, str]:
        return {
            "laurent": str(self),
            "value0": format_fraction(self.value_at_0()),
            "dvalue0_logq": format_fraction(self.derivative_at_0()),
        }


def value_at_0(value: OrbitalValue) -> Fraction:
    return value.value_at_0()


def derivative_at_0(value: OrbitalValue) -> Fraction:
    return value.derivative_at_0()


def _check_index(m: int) -> None:
    if m < 0:
        raise InvalidInputError(f"m must be non-negative, got {m}")


def orb_S_closed(orbit: SOrbit, m: int) -> OrbitalValue:
    """Orb(gamma, phi'_m, s) in closed form for a normalized orbit.

    Raises:
        NotNormalizedError: unless v(c) = 0.
    """
    _check_index(m)
    if not orbit.normalized:
        raise NotNormalizedError(f"closed form needs v(c) = 0, got v(c) = {orbit.c.valuation()}")
    r = orbit.r
    if m == 0:
        if r < 0:
            return OrbitalValue.zero()
        return OrbitalValue.from_coefficients({i: (-1) ** i for i in range(r + 1)})
    sign = (-1) ** m
    if r < -2 * m:
        return OrbitalValue.zero()
    if r == -2 * m:
        return OrbitalValue.from_coefficients({-m: sign})
    return OrbitalValue.from_coefficients({-m: sign, r + m: sign * (-1) ** r})


def _conjugate_min_valuation(orbit: SOrbit, k: int) -> int:
    """Minimum entry valuation of diag(p^k, 1)^{-1} gamma diag(p^k, 1)."""
    return int(min(
        orbit.a.valuation(),
        orbit.b.valuation() - k,
        orbit.c.valuation() + k,
        orbit.d.valuation(),
    ))


def _torus_range(orbit: SOrbit, m: int) -> range:
    bound = abs(int(orbit.b.valuation())) + abs(int(orbit.c.valuation())) + m + 2
    return range(-bound, bound + 1)


def orb_S_oracle(orbit: SOrbit, m: int) -> OrbitalValue:
    """Orb(gamma, phi'_m, s) by summing over the torus diag(p^k, 1).

    Works for any regular semisimple orbit, normalized or not.
    """
    _check_index(m)
    coefficients = {
        k: (-1) ** k
        for k in _torus_range(orbit, m)
        if _conjugate_min_valuation(orbit, k) == -m
    }
    return OrbitalValue.from_coefficients(coefficients)


def orb_S(orbit: SOrbit, m: int, method: str = CLOSED) -> OrbitalValue:
    if method == CLOSED:
        return orb_S_closed(orbit, m)
    if method == ORACLE:
        return orb_S_oracle(orbit, m)
    raise InvalidInputError(f"unknown method {method!r}")


def orb_S_combination(orbit: SOrbit, element: SModuleElement, method: str = CLOSED) -> OrbitalValue:
    """Orbital integral of a combination of the phi'_i at q = p."""
    total = OrbitalValue.zero()
    for index, coeff in element.specialize_q(orbit.config.p).items():
        coeff = Fraction(coeff)
        if coeff.denominator != 1:
            raise InvalidInputError(f"coefficient {coeff} of phi'_{index} is not an integer at q = {orbit.config.p}")
        total = total + orb_S(orbit, index, method).scale(int(coeff))
    return total


def orb_S_tilde(orbit: SOrbit, m: int, method: str = CLOSED) -> OrbitalValue:
    """Orb(gamma, phi~'_m, s) with phi~'_m = (-1)^m (phi'_m + 2 sum_{i<m} phi'_i)."""
    _check_index(m)
    return orb_S_combination(orbit, bc_S_eta_inverse(m), method)


def orb_U_support(g: UOrbit, m: int) -> int:
    """Orb(g, phi_m) in U(W_0): 1 or 0, since U_1(F_0) is compact and lies in K.

    Two criteria are evaluated and must agree: v(1 - a conj(a)) = -2m (r >= 0
    for m = 0), and every entry of g having valuation -m (all >= 0 for m = 0).

    Raises:
        InvalidInputError: for a g outside the split unitary group.
        CriteriaDisagreeError: when the two criteria disagree.
    """
    _check_index(m)
    if not g.is_split:
        raise InvalidInputError("orb_U_support is defined on U(W_0) with the identity form")
    r = g.r
    valuations = g.entry_valuations()
    if m == 0:
        by_invariant = r >= 0
        by_entries = all(v >= 0 for v in valuations)
    else:
        by_invariant = r == -2 * m
        by_entries = all(v == -m for v in valuations)
    if by_invariant != by_entries:
        raise CriteriaDisagreeError(
            f"m={m}: v(1 - Na) = {r} gives {int(by_invariant)}, entry valuations {valuations} give {int(by_entries)}",
        )
    return int(by_invariant)


def orbit_record(orbit: SOrbit, m: int, method: str = CLOSED) -> dict[str, object]:
    """JSON-ready summary of Orb(gamma, phi~'_m, s)."""
    value = orb_S_tilde(orbit, m, method)
    return {
        "p": orbit.config.p,
        **orbit.as_dict(),
        "m": m,
        **value.as_dict(),
        "omega": transfer_factor(orbit),
    }


def _inverse(matrix: Sequence[Sequence[FieldElement]]) -> Matrix:
    (a, b), (c, d) = matrix
    det = a * d - b * c
    if not det:
        raise InvalidInputError("matrix is singular")
    return ((d / det, -b / det), (-c / det, a / det))


def _product(left: Sequence[Sequence[FieldElement]], right: Sequence[Sequence[FieldElement]]) -> Matrix:
    return tuple(
        tuple(left[i][0] * right[0][j] + left[i][1] * right[1][j] for j in range(2))
        for i in range(2)
    )  # type: ignore[return-value]


def symmetric_image(g: Sequence[Sequence[FieldElement]]) -> SOrbit:
    """gamma = g conj(g)^{-1}."""
    g_bar = tuple(tuple(entry.conj() for entry in row) for row in g)
    return SOrbit(_product(g, _inverse(g_bar)))


def homogeneous_lift(orbit: SOrbit, mu: FieldElement | None = None) -> Matrix:
    """Some g with g conj(g)^{-1} = gamma: g = mu + gamma conj(mu) for invertible choices of mu."""
    config = orbit.config
    delta = FieldElement.delta(config)
    candidates = [mu] if mu is not None else [FieldElement.of(1, config), delta, 1 + delta, 1 + 2 * delta]
    for candidate in candidates:
        g = tuple(
            tuple(
                (candidate if i == j else 0) + orbit.gamma[i][j] * candidate.conj()
                for j in range(2)
            )
            for i in range(2)
        )
        g = tuple(tuple(FieldElement.of(entry, config) for entry in row) for row in g)
        if g[0][0] * g[1][1] - g[0][1] * g[1][0]:
            return g  # type: ignore[return-value]
    raise InvalidInputError("no invertible lift among the candidate scalars")


@lru_cache(maxsize=256)
def iwasawa_weight(i: int, m: int, config: PrimeConfig) -> int:
    """Integral of f'_m(g h) eta~(g h) over h in GL_2(F_0) for g = [[1, u], [0, 1]], u = p^-i delta.

    Counted coset by coset: h K_0 runs over [[p^a, z], [0, p^b]] with z in
    p^-1 O_{F_0} / p^a O_{F_0}, each of volume 1, and a coset contributes when
    g h is integral with v(det g h) = m.  Cosets with v(z) < -1 are never
    integral.  The sign eta~(g h) is (-1)^m on the support.
    """
    if m < 0:
        return 0
    p = config.p
    one, zero = FieldElement.of(1, config), FieldElement.of(0, config)
    u = FieldElement.delta(config) * Fraction(1, p**i) if i > 0 else FieldElement.delta(config)
    g = ((one, u), (zero, one))
    count = 0
    for a in range(-1, m + 2):
        b = m - a
        diagonal = (FieldElement.of(Fraction(p) ** a, config), FieldElement.of(Fraction(p) ** b, config))
        for k in range(p ** (a + 1)):
            h = ((diagonal[0], FieldElement.of(Fraction(k, p), config)), (zero, diagonal[1]))
            gh = _product(g, h)
            if any(entry.valuation() < 0 for row in gh for entry in row):
                continue
            if (gh[0][0] * gh[1][1] - gh[0][1] * gh[1][0]).valuation() == m:
                count += 1
    return (-1) ** m * count


def homogeneous_orb_oracle(g: Sequence[Sequence[FieldElement]], m: int) -> OrbitalValue:
    """Homogeneous orbital integral of 1 (x) f'_m at (1, g), as a polynomial in Z' = q^{-s}.

    Computed by summing Iwasawa weights over the torus and checked against
    eta~(g)^{-1} Orb(gamma, r^eta_*(f'_m), 2s) for gamma = g conj(g)^{-1}.

    Raises:
        VerificationError: when the two evaluations differ.
    """
    _check_index(m)
    orbit = symmetric_image(g)
    sign = eta_tilde_det(g)
    coefficients: dict[int, int] = {}
    for k in _torus_range(orbit, m):
        i = -_conjugate_min_valuation(orbit, k)
        if i < 0 or i > m:
            continue
        weight = iwasawa_weight(i, m, orbit.config)
        if weight:
            coefficients[2 * k] = coefficients.get(2 * k, 0) + sign * (-1) ** k * weight
    homogeneous = OrbitalValue.from_coefficients(coefficients)
    method = CLOSED if orbit.normalized else ORACLE
    inhomogeneous = orb_S_combination(orbit, r_eta_star(m), method).substitute_square().scale(sign)
    if homogeneous != inhomogeneous:
        raise VerificationError(
            f"homogeneous side {homogeneous} differs from the inhomogeneous side {inhomogeneous} at m={m}",
        )
    logger.debug(
        "homogeneous orbital integral checked",
        m=m,
        r=orbit.r,
        value=str(homogeneous),
        **_tags.get_log_kwargs(LogType.ORBITAL),
    )
    return homogeneous
