"""Checks of the fundamental lemma, the arithmetic fundamental lemma, the kernel of dOrb and the separation of Hecke functions by orbital integrals in rank 2."""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from random import Random

import structlog
from sympy import isprime

from ..constants import (
    COPRIMALITY_PRIMES,
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_FL_EVEN_SAMPLES,
    DEFAULT_FL_ODD_SAMPLES,
    DEFAULT_SEED,
    KIND_AFL,
    KIND_COMM,
    KIND_COPRIME,
    KIND_FL,
    KIND_INJECTIVITY,
    KIND_KERNEL,
)
from ..exceptions import InvalidInputError, PrecisionError, VerificationError
from ..hecke import bc_S_eta, bc_S_eta_inverse, sat_u2_phi
from ..intersection import int_g_phi, int_g_phi_at
from ..lattice import HermSpace, commutativity_check, standard_selfdual
from ..localfield import PrimeConfig
from ..logging_utils import LogTagging, LogType
from ..orbital import (
    SOrbit,
    derivative_at_0,
    matched_unitary,
    orb_S_combination,
    orb_S_tilde,
    orb_U_support,
    sample_orbit,
    transfer_factor,
    value_at_0,
)
from ..symfun import bezout_univariate, format_laurent, gcd_univariate
from .report import VerificationReport

logger = structlog.get_logger(__name__)
_tags = LogTagging({"component": "afl"})


def _log_report(report: VerificationReport) -> None:
    log = logger.info if report.passed else logger.warning
    log(
        "verification finished",
        kind=report.kind,
        **report.summary,
        **_tags.get_log_kwargs(LogType.VERIFICATION),
    )


def _fl_r_values(m_max: int) -> tuple[list[int], list[int]]:
    """Odd r in [1, 2 m_max + 1] and even r from -2 m_max up to 4.

    No orbit has odd negative r, so the vanishing branch starts at r = 1.
    """
    odd = list(range(1, 2 * m_max + 2, 2))
    even = [-2 * k for k in range(m_max, 0, -1)] + [0, 2, 4]
    return odd, even


def fl_check(
    config: PrimeConfig | None = None,
    odd_samples: int = DEFAULT_FL_ODD_SAMPLES,
    even_samples: int = DEFAULT_FL_EVEN_SAMPLES,
    m_max: int = 6,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Orb(g, phi_m) = omega(gamma) Orb(gamma, phi~'_m) at s = 0 on sampled orbits.

    ``odd_samples`` orbits with odd r check that the S-side value vanishes
    (note ``nonsplit``).  ``even_samples`` orbits with even r get a unitary g
    with the same invariants whose orbital integral is compared (note
    ``split``); an orbit whose g cannot be built at the configured precision
    is recorded as skipped.
    """
    if odd_samples < 0 or even_samples < 0:
        raise InvalidInputError(f"sample counts must be non-negative, got {odd_samples} and {even_samples}")
    config = config or PrimeConfig()
    rng = Random(seed)
    odd_r, even_r = _fl_r_values(m_max)
    report = VerificationReport(
        KIND_FL,
        {
            "p": config.p,
            "seed": seed,
            "odd_samples": odd_samples,
            "even_samples": even_samples,
            "m_max": m_max,
        },
    )
    for index in range(odd_samples):
        r = odd_r[index % len(odd_r)]
        orbit = sample_orbit(config, rng, r)
        for m in range(m_max + 1):
            inputs = {"sample": index, "r": r, "m": m, "a": str(orbit.a), "b": str(orbit.b)}
            report.add(inputs, value_at_0(orb_S_tilde(orbit, m)), Fraction(0), note="nonsplit")
    for index in range(even_samples):
        r = even_r[index % len(even_r)]
        orbit = sample_orbit(config, rng, r)
        try:
            g = matched_unitary(orbit, config.precision)
        except PrecisionError as err:
            logger.warning(
                "matched unitary element not constructed",
                r=r,
                error=str(err),
                **_tags.get_log_kwargs(LogType.VERIFICATION),
            )
            report.skip({"sample": index, "r": r}, str(err))
            continue
        omega = transfer_factor(orbit)
        for m in range(m_max + 1):
            inputs = {"sample": index, "r": r, "m": m, "a": str(orbit.a), "b": str(orbit.b)}
            s_value = value_at_0(orb_S_tilde(orbit, m))
            report.add(inputs, Fraction(orb_U_support(g, m)), omega * s_value, note="split")
    _log_report(report)
    return report


def _afl_orbit(config: PrimeConfig, rng: Random, r: int) -> SOrbit:
    if r < 1 or r % 2 == 0:
        raise InvalidInputError(f"AFL cases need odd r >= 1, got {r}")
    orbit = sample_orbit(config, rng, r)
    g = matched_unitary(orbit, config.precision)
    if g.is_split or not g.a.agrees_with(orbit.a):
        raise VerificationError(f"no nonsplit unitary element matches the orbit with r={r}")
    return orbit


def afl_check(
    r_list: Sequence[int] = (1, 3, 5, 7),
    m_max: int = 5,
    config: PrimeConfig | None = None,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Int(g, phi_m) = -omega(gamma) dOrb(gamma, phi~'_m) / log q for matching (g, gamma)."""
    config = config or PrimeConfig()
    rng = Random(seed)
    report = VerificationReport(
        KIND_AFL,
        {"p": config.p, "seed": seed, "r_list": list(r_list), "m_max": m_max},
    )
    for r in r_list:
        orbit = _afl_orbit(config, rng, r)
        omega = transfer_factor(orbit)
        for m in range(m_max + 1):
            geometric = int_g_phi_at(orbit.a, m)
            if geometric.value != int_g_phi(r, m).value:
                raise VerificationError(f"intersection number at (r={r}, m={m}) depends on the chosen g")
            analytic = -omega * derivative_at_0(orb_S_tilde(orbit, m))
            report.add(
                {"r": r, "m": m, "a": str(orbit.a), "b": str(orbit.b)},
                geometric.value,
                analytic,
                extra={"omega": omega},
            )
    _log_report(report)
    return report


def _derivative_profile(orbits: Iterable[SOrbit], m: int) -> tuple[Fraction, ...]:
    return tuple(derivative_at_0(orb_S_tilde(orbit, m)) for orbit in orbits)


def _attainable_r(bound: int) -> list[int]:
    """Every r in [-bound, bound] some orbit attains: odd negative values never occur."""
    return [r for r in range(-bound, bound + 1) if r >= 0 or r % 2 == 0]


def kernel_check(
    m_max: int = 6,
    config: PrimeConfig | None = None,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """The image of phi_m under dOrb is spanned by phi_0 and phi_1; phi_m - phi_1 lies in the kernel.

    Profiles are taken over one orbit for each odd r in [-2 m_max, 2 m_max].
    Odd negative r is never attained (sample_orbit rejects it), so these are
    the odd r in [1, 2 m_max], the locus where g and gamma match.
    """
    if m_max < 3:
        raise InvalidInputError(f"m_max must be at least 3, got {m_max}")
    config = config or PrimeConfig()
    rng = Random(seed)
    r_values = [r for r in _attainable_r(2 * m_max) if r % 2]
    orbits = [sample_orbit(config, rng, r) for r in r_values]
    report = VerificationReport(
        KIND_KERNEL,
        {"p": config.p, "seed": seed, "m_max": m_max, "r_values": r_values},
    )
    reference = _derivative_profile(orbits, 1)
    report.add(
        {"m": 0, "against": 1},
        _derivative_profile(orbits, 0) == reference,
        False,
        note="phi_0 separates from phi_1",
    )
    for m in range(2, m_max + 1):
        report.add({"m": m, "against": 1}, _derivative_profile(orbits, m), reference, note="profile")
    for m in range(2, m_max + 1):
        lift = bc_S_eta_inverse(m) - bc_S_eta_inverse(1)
        if bc_S_eta(lift) != sat_u2_phi(m) - sat_u2_phi(1):
            raise VerificationError(f"lift of phi_{m} - phi_1 does not base change back")
        for orbit, r in zip(orbits, r_values):
            report.add(
                {"m": m, "r": r},
                derivative_at_0(orb_S_combination(orbit, lift)),
                Fraction(0),
                note="kernel",
            )
    _log_report(report)
    return report


def injectivity_check(
    m_max: int = 6,
    r_bound: int = 12,
    config: PrimeConfig | None = None,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Orbital integrals separate phi~'_0, ..., phi~'_{m_max}.

    The profile of m is the tuple of orb(gamma, phi~'_m) as Laurent polynomials
    in Z, over one sampled orbit for each attainable r in [-r_bound, r_bound].
    Every pair of distinct indices must give distinct profiles.
    """
    if m_max < 1:
        raise InvalidInputError(f"m_max must be at least 1, got {m_max}")
    if r_bound < 0:
        raise InvalidInputError(f"r_bound must be non-negative, got {r_bound}")
    config = config or PrimeConfig()
    rng = Random(seed)
    r_values = _attainable_r(r_bound)
    orbits = [sample_orbit(config, rng, r) for r in r_values]
    report = VerificationReport(
        KIND_INJECTIVITY,
        {"p": config.p, "seed": seed, "m_max": m_max, "r_values": r_values},
    )
    profiles = [tuple(orb_S_tilde(orbit, m) for orbit in orbits) for m in range(m_max + 1)]
    for m in range(m_max + 1):
        for other in range(m + 1, m_max + 1):
            report.add(
                {"m": m, "against": other},
                profiles[m] == profiles[other],
                False,
                note="separates",
            )
    _log_report(report)
    return report


def coprimality_check(q_values: Sequence[int] = COPRIMALITY_PRIMES) -> VerificationReport:
    """gcd(P_2, P_3) = 1 for P_m = Sat(phi_m - phi_1) in X_1 = X + 1/X, with a Bezout certificate."""
    if not q_values:
        raise InvalidInputError("q_values must be non-empty")
    report = VerificationReport(KIND_COPRIME, {"q_values": list(q_values)})
    for q in q_values:
        if not isprime(q) or q == 2:
            raise InvalidInputError(f"q must be an odd prime, got {q}")
        p2 = (sat_u2_phi(2) - sat_u2_phi(1)).sat.specialize_q(q).poly
        p3 = (sat_u2_phi(3) - sat_u2_phi(1)).sat.specialize_q(q).poly
        gcd = gcd_univariate(p2, p3)
        certificate = bezout_univariate(p2, p3)
        if not certificate.verify(p2, p3):
            raise VerificationError(f"Bezout certificate fails at q={q}")
        report.add(
            {"q": q},
            format_laurent(gcd),
            "1",
            extra={
                "P2": format_laurent(p2),
                "P3": format_laurent(p3),
                "R2": format_laurent(certificate.s),
                "R3": format_laurent(certificate.t),
            },
        )
    _log_report(report)
    return report


def commutativity_report(
    n: int,
    t: int,
    t2: int,
    config: PrimeConfig | None = None,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    workers: int | None = None,
) -> VerificationReport:
    """T_{<=t} T_{<=t2} and T_{<=t2} T_{<=t} reach the same self-dual lattices from the standard one."""
    config = config or PrimeConfig()
    report = VerificationReport(KIND_COMM, {"p": config.p, "n": n, "t": t, "t2": t2})
    outcome = commutativity_check(standard_selfdual(HermSpace(n, config)), t, t2, budget, workers)
    report.add(
        {"n": n, "t": t, "t2": t2},
        outcome.equal,
        True,
        extra={"left_set_size": outcome.left_set_size, "right_set_size": outcome.right_set_size},
    )
    _log_report(report)
    return report
