"""Degrees of Hecke correspondences and of the difference divisors Z(p^m u)°.

Z(p^m u_0)° is the quasi-canonical divisor of level 2m and Z(p^m u_1)° that of
level 2m + 1, where u_1 has valuation 1.  The level-k divisor has degree
q^{k-1}(q + 1) for k >= 1 and degree 1 for k = 0.
"""
from __future__ import annotations

from typing import Any

import structlog
from sympy import expand

from ..constants import DEFAULT_ENUMERATION_BUDGET
from ..exceptions import InvalidInputError, VerificationError
from ..hecke import sat_u2_phi
from ..lattice import HermSpace, distance_count, standard_selfdual
from ..localfield import PrimeConfig
from ..logging_utils import LogTagging, LogType

logger = structlog.get_logger(__name__)
_tags = LogTagging({"component": "intersection"})


def degree_Tm(m: int, q: Any) -> Any:
    """q^{2m-1}(q + 1); ``q`` may be an integer or a sympy symbol."""
    if m < 1:
        raise InvalidInputError(f"m must be at least 1, got {m}")
    return q ** (2 * m - 1) * (q + 1)


def hecke_degree(m: int, q: int) -> int:
    """Sat(phi_m) at the parameter X = q, the number of self-dual lattices at distance m."""
    if m < 0:
        raise InvalidInputError(f"m must be non-negative, got {m}")
    value = sat_u2_phi(m).sat.evaluate([q], q_value=q)
    if value.denominator != 1:
        raise VerificationError(f"Sat(phi_{m}) at X = q = {q} is not an integer: {value}")
    return int(value)


def quasi_canonical_degree(level: int, q: Any) -> Any:
    if level < 0:
        raise InvalidInputError(f"level must be non-negative, got {level}")
    if level == 0:
        return 1
    return q ** (level - 1) * (q + 1)


def divisor_degrees(m_max: int, q: Any) -> list[dict[str, Any]]:
    """Check the recursions for T_{Gamma_0} and T_1 acting on Z(p^m u)° at the level of degrees.

    T_{Gamma_0} has degree q + 1 and T_1 = T_{Gamma_0}^2 has degree (q + 1)^2:
      T_{Gamma_0} Z(u_0) = Z(u_1)
      T_{Gamma_0} Z(u_1) = Z(p u_0)° + (q + 1) Z(u_0)
      T_{Gamma_0} Z(p^m u_0)° = Z(p^m u_1)° + q Z(p^{m-1} u_1)°, m >= 1
      T_{Gamma_0} Z(p^m u_1)° = Z(p^{m+1} u_0)° + q Z(p^m u_0)°, m >= 1
      T_1 Z(p^m u_0)° = Z(p^{m+1} u_0)° + 2q Z(p^m u_0)° + c_m Z(p^{m-1} u_0)°,
    with c_1 = q^2 + q and c_m = q^2 for m >= 2.

    Raises:
        VerificationError: when a recursion fails or deg Z(p^m u_0)° differs from degree_Tm.
    """
    def even(m: int) -> Any:
        return quasi_canonical_degree(2 * m, q)

    def odd(m: int) -> Any:
        return quasi_canonical_degree(2 * m + 1, q)

    gamma0 = q + 1
    rows: list[dict[str, Any]] = []
    for m in range(m_max + 1):
        checks = []
        if m == 0:
            checks.append(("T_Gamma0 Z(u_0)", gamma0 * even(0), odd(0)))
            checks.append(("T_Gamma0 Z(u_1)", gamma0 * odd(0), even(1) + (q + 1) * even(0)))
            checks.append(("T_1 Z(u_0)", gamma0**2 * even(0), even(1) + (q + 1) * even(0)))
        else:
            checks.append(("T_Gamma0 Z(p^m u_0)", gamma0 * even(m), odd(m) + q * odd(m - 1)))
            checks.append(("T_Gamma0 Z(p^m u_1)", gamma0 * odd(m), even(m + 1) + q * even(m)))
            tail = q**2 + q if m == 1 else q**2
            checks.append(("T_1 Z(p^m u_0)", gamma0**2 * even(m), even(m + 1) + 2 * q * even(m) + tail * even(m - 1)))
            if expand(even(m) - degree_Tm(m, q)) != 0:
                raise VerificationError(f"deg Z(p^{m} u_0)° = {even(m)} differs from {degree_Tm(m, q)}")
        for name, lhs, rhs in checks:
            if expand(lhs - rhs) != 0:
                raise VerificationError(f"{name} at m={m}: degree {lhs} != {rhs}")
            rows.append({"m": m, "relation": name, "lhs": lhs, "rhs": rhs})
    logger.debug(
        "divisor degree recursions checked",
        m_max=m_max,
        rows=len(rows),
        **_tags.get_log_kwargs(LogType.VERIFICATION),
    )
    return rows


def degree_cross_check(m: int, q: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> dict[str, int]:
    """degree_Tm against the Satake degree and a count of self-dual lattices at distance m.

    Raises:
        VerificationError: when the three numbers differ.
    """
    expected = degree_Tm(m, q)
    from_satake = hecke_degree(m, q)
    base = standard_selfdual(HermSpace(2, PrimeConfig(p=q)))
    counted = distance_count(base, m, budget)
    logger.info(
        "Hecke degrees compared",
        m=m,
        q=q,
        degree=expected,
        satake=from_satake,
        lattice_count=counted,
        **_tags.get_log_kwargs(LogType.VERIFICATION),
    )
    if not expected == from_satake == counted:
        raise VerificationError(
            f"degree of T_{m} at q={q}: formula {expected}, Satake {from_satake}, lattices {counted}",
        )
    return {"m": m, "q": q, "degree": expected, "satake": from_satake, "lattice_count": counted}
