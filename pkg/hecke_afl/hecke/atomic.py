"""The atomic basis phi_t of H_K, expanded in the f^[t] basis through lattice counts."""
from __future__ import annotations

from typing import Any

import structlog
from sympy import interpolate, primerange

from ..constants import DEFAULT_ENUMERATION_BUDGET
from ..exceptions import InvalidInputError, VerificationError
from ..lattice import m_count
from ..logging_utils import LogTagging, LogType
from ..symfun import QFIELD, Q, qlaurent, specialize_coefficient
from .unitary import UHecke, fbracket_combination

logger = structlog.get_logger(__name__)
_tags = LogTagging({"component": "hecke"})


def _check_atomic(n: int, t: int) -> None:
    if t % 2 or not 0 <= t <= n:
        raise InvalidInputError(f"t must be even with 0 <= t <= n, got n={n}, t={t}")


def atomic_coefficients(n: int, t: int, q_value: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> dict[int, int]:
    """{t': m(t', t)} for even t' <= t, counted at q = q_value."""
    _check_atomic(n, t)
    coeffs = {t_prime: m_count(n, t_prime, t, q_value, budget=budget) for t_prime in range(0, t + 1, 2)}
    if coeffs[t] != 1:
        raise VerificationError(f"m({t},{t}) = {coeffs[t]}, expected 1")
    return coeffs


def atomic_phi(n: int, t: int, q_value: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> UHecke:
    """phi_t = sum_{t' <= t} m(t', t) f^[t'] at a numeric q.

    Example: ``atomic_phi(2, 2, 3).named_text()`` is ``f[2] + 4*f[0]``.
    """
    coeffs = atomic_coefficients(n, t, q_value, budget)
    sat = fbracket_combination(n, coeffs).specialize_q(q_value)
    return UHecke(n, sat, basis_coeffs=coeffs, q_value=q_value)


def interpolation_degree(n: int, t_prime: int, t: int) -> int:
    """Degree in q of the number of isotropic d-subspaces in a nondegenerate (n - t')-space."""
    d = (t - t_prime) // 2
    return d * (2 * (n - t_prime) - 3 * d)


def _default_primes(count: int) -> list[int]:
    primes: list[int] = []
    bound = 16
    while len(primes) < count:
        primes = list(primerange(3, bound))
        bound *= 2
    return primes[:count]


def m_count_polynomial(
    n: int,
    t_prime: int,
    t: int,
    primes: list[int] | None = None,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> Any:
    """m(t', t) as a polynomial in q, fitted through lattice counts at several primes.

    The last prime is held out and checked against the fitted polynomial.
    Only small residue spaces are practical: the count enumerates subspaces
    over F_{q^2} at each prime.

    Raises:
        InvalidInputError: when fewer than degree + 2 primes are supplied.
        VerificationError: when the held-out prime disagrees.
    """
    _check_atomic(n, t)
    degree = interpolation_degree(n, t_prime, t)
    primes = sorted(primes) if primes is not None else _default_primes(degree + 2)
    if len(primes) < degree + 2:
        raise InvalidInputError(f"need at least {degree + 2} primes for degree {degree}, got {primes}")
    points = [(q, m_count(n, t_prime, t, q, budget=budget)) for q in primes]
    fitted = qlaurent(interpolate(points[:-1], Q).expand())
    check_q, check_value = points[-1]
    if specialize_coefficient(fitted, check_q) != check_value:
        raise VerificationError(
            f"m({t_prime},{t}) polynomial fails at q={check_q}: expected {check_value}",
        )
    logger.debug(
        "m_count interpolated",
        n=n,
        t_prime=t_prime,
        t=t,
        primes=primes,
        polynomial=str(QFIELD.to_sympy(fitted)),
        **_tags.get_log_kwargs(LogType.ENUMERATION),
    )
    return fitted


def atomic_phi_symbolic(n: int, t: int, primes: list[int] | None = None) -> UHecke:
    """phi_t with coefficients m(t', t) interpolated as polynomials in q."""
    _check_atomic(n, t)
    coeffs = {t: QFIELD.one}
    for t_prime in range(0, t, 2):
        coeffs[t_prime] = m_count_polynomial(n, t_prime, t, primes)
    return UHecke(n, fbracket_combination(n, coeffs), basis_coeffs=coeffs)
