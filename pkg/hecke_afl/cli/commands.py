"""Subcommand handlers.  Each returns a JSON-ready payload and whether every check passed."""
from __future__ import annotations

import argparse
from typing import Any

from ..afl import (
    VerificationReport,
    afl_check,
    commutativity_report,
    coprimality_check,
    fl_check,
    injectivity_check,
    jsonable,
    kernel_check,
)
from ..constants import JSON_SCHEMA_VERSION
from ..exceptions import InvalidInputError
from ..hecke import (
    GLHecke,
    atomic_phi,
    atomic_phi_symbolic,
    bc,
    sat_f_bracket,
    sat_gl2_fprime,
    sat_gl_minuscule,
    sat_u2_f,
    sat_u2_phi,
)
from ..intersection import degree_cross_check, degree_Tm, int_g_phi
from ..lattice import HermSpace, counts_table, m_count, standard_selfdual, witness_partition
from ..localfield import FieldElement
from ..orbital import CLOSED, ORACLE, make_gamma, match_class, orb_S, orbit_record
from ..symfun import GLSatakeElement
from .config import CliConfig

Result = tuple[dict[str, Any], bool]


def _payload(command: str, **fields: Any) -> dict[str, Any]:
    return {"schema": JSON_SCHEMA_VERSION, "command": command, **fields}


def _report(report: VerificationReport) -> Result:
    return report.as_dict(), report.passed


def cmd_satake(args: argparse.Namespace, cfg: CliConfig) -> Result:
    family = args.family
    if family == "fbracket":
        if args.t is None:
            raise InvalidInputError("--t is required for the f^[t] family")
        element = sat_f_bracket(args.n, args.t)
        index = {"t": args.t}
    else:
        if args.m is None:
            raise InvalidInputError(f"--m is required for the {family} family")
        if args.n != 2:
            raise InvalidInputError(f"the {family} family is implemented for n = 2")
        element = {"f'": sat_gl2_fprime, "f": sat_u2_f, "phi": sat_u2_phi}[family](args.m)
        index = {"m": args.m}
    return _payload("satake", family=family, n=args.n, **index, satake=str(element)), True


def cmd_bc(args: argparse.Namespace, cfg: CliConfig) -> Result:
    if args.fprime is not None:
        if args.n != 2:
            raise InvalidInputError("--fprime is implemented for n = 2")
        element = sat_gl2_fprime(args.fprime)
        name = f"f'_{args.fprime}"
    elif args.sigma is not None:
        element = sat_gl_minuscule(args.n, args.sigma)
        name = f"1_(K' p^(1^{args.sigma}) K')"
    else:
        element = GLHecke(args.n, GLSatakeElement.from_text(args.n, args.expr))
        name = args.expr
    image = bc(element)
    return _payload("bc", n=args.n, element=name, satake=str(element), bc=str(image)), True


def cmd_atomic(args: argparse.Namespace, cfg: CliConfig) -> Result:
    if args.symbolic:
        phi = atomic_phi_symbolic(args.n, args.t)
        return _payload(
            "atomic",
            n=args.n,
            t=args.t,
            expansion=phi.named_text(),
            satake=str(phi),
        ), True
    phi = atomic_phi(args.n, args.t, cfg.p, budget=args.budget)
    return _payload(
        "atomic",
        n=args.n,
        t=args.t,
        q=cfg.p,
        m_counts={str(k): v for k, v in sorted(phi.basis_coeffs.items())},
        expansion=phi.named_text(),
        satake=str(phi),
    ), True


def cmd_orb(args: argparse.Namespace, cfg: CliConfig) -> Result:
    config = cfg.prime_config()
    orbit = make_gamma(FieldElement.parse(args.a, config), FieldElement.parse(args.b, config))
    method = args.method or (CLOSED if orbit.normalized else ORACLE)
    record = orbit_record(orbit, args.m, method)
    record["phi_prime"] = orb_S(orbit, args.m, method).as_dict()
    return _payload(
        "orb",
        method=method,
        match_class=match_class(orbit),
        normalized=orbit.normalized,
        orbit=record,
    ), True


def cmd_intersect(args: argparse.Namespace, cfg: CliConfig) -> Result:
    result = int_g_phi(args.r, args.m)
    fields = result.as_dict()
    if args.m >= 1:
        fields["degree"] = jsonable(degree_Tm(args.m, cfg.p))
    return _payload("intersect", q=cfg.p, **fields), True


def cmd_fl_check(args: argparse.Namespace, cfg: CliConfig) -> Result:
    return _report(fl_check(cfg.prime_config(), args.odd_samples, args.even_samples, args.m_max, cfg.seed))


def cmd_afl_check(args: argparse.Namespace, cfg: CliConfig) -> Result:
    return _report(afl_check(args.r_list, args.m_max, cfg.prime_config(), cfg.seed))


def cmd_kernel_check(args: argparse.Namespace, cfg: CliConfig) -> Result:
    return _report(kernel_check(args.m_max, cfg.prime_config(), cfg.seed))


def cmd_injectivity_check(args: argparse.Namespace, cfg: CliConfig) -> Result:
    return _report(injectivity_check(args.m_max, args.r_bound, cfg.prime_config(), cfg.seed))


def cmd_coprime_check(args: argparse.Namespace, cfg: CliConfig) -> Result:
    return _report(coprimality_check(args.q_list))


def cmd_lattice(args: argparse.Namespace, cfg: CliConfig) -> Result:
    action = args.action
    if action == "count":
        value = m_count(args.n, args.t_prime, args.t, cfg.p, seed=cfg.seed, budget=args.budget)
        return _payload("lattice count", n=args.n, t_prime=args.t_prime, t=args.t, q=cfg.p, m_count=value), True
    if action == "table":
        return _payload("lattice table", rows=counts_table(args.n, cfg.p, args.budget)), True
    if action == "support":
        base = standard_selfdual(HermSpace(args.n, cfg.prime_config()))
        partition = witness_partition(base, args.t, args.budget)
        return _payload(
            "lattice support",
            n=args.n,
            t=args.t,
            q=cfg.p,
            rows=[witness.as_dict() for witness in partition.values()],
        ), True
    if action == "distance":
        return _payload("lattice distance", **degree_cross_check(args.m, cfg.p, args.budget)), True
    report = commutativity_report(args.n, args.t, args.t2, cfg.prime_config(), args.budget)
    return _report(report)


HANDLERS = {
    "satake": cmd_satake,
    "bc": cmd_bc,
    "atomic": cmd_atomic,
    "orb": cmd_orb,
    "intersect": cmd_intersect,
    "fl-check": cmd_fl_check,
    "afl-check": cmd_afl_check,
    "kernel-check": cmd_kernel_check,
    "injectivity-check": cmd_injectivity_check,
    "coprime-check": cmd_coprime_check,
    "lattice": cmd_lattice,
}
