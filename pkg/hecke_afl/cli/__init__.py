"""Command line entry point: ``hecke-afl <subcommand> [options]``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import TextIO

import structlog

from ..constants import (
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_FL_EVEN_SAMPLES,
    DEFAULT_FL_ODD_SAMPLES,
    DEFAULT_PRECISION,
    DEFAULT_PRIME,
    DEFAULT_SEED,
    EXIT_BUDGET,
    EXIT_FAILED,
    EXIT_OK,
    EXIT_USAGE,
)
from ..exceptions import (
    BudgetExceededError,
    CriteriaDisagreeError,
    InvalidInputError,
    PrecisionError,
    UnimplementedRegimeError,
    VerificationError,
)
from ..logging_utils import LoggingUtils, LogTagging, LogType
from ..orbital import CLOSED, ORACLE
from .commands import HANDLERS
from .config import FORMATS, LOG_FORMATS, CliConfig
from .output import emit, render

logger = structlog.get_logger(__name__)
_tags = LogTagging({"component": "cli"})

LATTICE_ACTIONS = ("count", "comm", "table", "support", "distance")
SATAKE_FAMILIES = ("f'", "f", "phi", "fbracket")


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from err


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecke-afl",
        description="Exact Hecke algebra calculus and FL/AFL checks for U(1) x U(2).",
    )
    parser.add_argument("--p", type=int, default=DEFAULT_PRIME, help="odd prime (default: 3)")
    parser.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="p-adic working precision N")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--out", default=None, help="output file (default: stdout)")
    parser.add_argument("--log-level", default="warning", choices=("debug", "info", "warning", "error"))
    parser.add_argument("--log-file", default=None)
    parser.add_argument("--log-format", choices=LOG_FORMATS, default="json")

    sub = parser.add_subparsers(dest="command", required=True)

    satake = sub.add_parser("satake", help="Satake transform of a named Hecke function")
    satake.add_argument("--family", choices=SATAKE_FAMILIES, required=True)
    satake.add_argument("--n", type=int, default=2)
    satake.add_argument("--m", type=int, default=None)
    satake.add_argument("--t", type=int, default=None)

    bc = sub.add_parser("bc", help="base change of a GL_n Hecke element")
    bc.add_argument("--n", type=int, default=2)
    source = bc.add_mutually_exclusive_group(required=True)
    source.add_argument("--fprime", type=int, default=None)
    source.add_argument("--sigma", type=int, default=None)
    source.add_argument("--expr", default=None, help="polynomial in s1..s{n-1}, s{n}^±1 and q")

    atomic = sub.add_parser("atomic", help="atomic function phi_{n,t} in the Hecke basis")
    atomic.add_argument("--n", type=int, required=True)
    atomic.add_argument("--t", type=int, required=True)
    atomic.add_argument("--symbolic", action="store_true", help="coefficients as polynomials in q")
    atomic.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET)

    orb = sub.add_parser("orb", help="orbital integral of phi'_m at gamma(a, b)")
    orb.add_argument("--a", required=True)
    orb.add_argument("--b", required=True)
    orb.add_argument("--m", type=int, required=True)
    orb.add_argument("--method", choices=(CLOSED, ORACLE), default=None)

    intersect = sub.add_parser("intersect", help="Int(g, phi_m) from r = v(1 - N a)")
    intersect.add_argument("--r", type=int, required=True)
    intersect.add_argument("--m", type=int, required=True)

    fl = sub.add_parser("fl-check", help="fundamental lemma on sampled orbits")
    fl.add_argument("--odd-samples", type=int, default=DEFAULT_FL_ODD_SAMPLES, help="orbits with odd r")
    fl.add_argument("--even-samples", type=int, default=DEFAULT_FL_EVEN_SAMPLES, help="orbits with even r")
    fl.add_argument("--m-max", type=int, default=6)

    afl = sub.add_parser("afl-check", help="arithmetic fundamental lemma on sampled orbits")
    afl.add_argument("--r-list", type=_int_list, default=[1, 3, 5, 7])
    afl.add_argument("--m-max", type=int, default=5)

    kernel = sub.add_parser("kernel-check", help="phi_m - phi_1 lies in the kernel of dOrb")
    kernel.add_argument("--m-max", type=int, default=6)

    injectivity = sub.add_parser("injectivity-check", help="orbital integrals separate phi~'_0..phi~'_m")
    injectivity.add_argument("--m-max", type=int, default=6)
    injectivity.add_argument("--r-bound", type=int, default=12)

    coprime = sub.add_parser("coprime-check", help="gcd of Sat(phi_2 - phi_1) and Sat(phi_3 - phi_1)")
    coprime.add_argument("--q-list", type=_int_list, default=[3, 5, 7, 11, 13])

    lattice = sub.add_parser("lattice", help="vertex lattice enumeration")
    lattice.add_argument("action", choices=LATTICE_ACTIONS)
    lattice.add_argument("--n", type=int, default=2)
    lattice.add_argument("--t", type=int, default=0)
    lattice.add_argument("--t-prime", type=int, default=0)
    lattice.add_argument("--t2", type=int, default=0)
    lattice.add_argument("--m", type=int, default=1)
    lattice.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET)
    return parser


def _setup_logging(cfg: CliConfig, command: str) -> None:
    log_dir = log_name = None
    if cfg.log_file:
        path = Path(cfg.log_file)
        log_dir, log_name = str(path.parent), path.name
    LoggingUtils(
        log_file=log_name,
        log_dir=log_dir,
        log_level=cfg.log_level,
        print_output=True,
        binding_dict={"command": command, "p": cfg.p, "seed": cfg.seed},
        json_formatter=cfg.log_format == "json",
    )


def _fail(message: str, err: Exception, code: int, stderr: TextIO) -> int:
    logger.error(message, error=str(err), error_type=type(err).__name__, **_tags.get_log_kwargs(LogType.CLI))
    stderr.write(f"hecke-afl: {err}\n")
    return code


def run(argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Parse ``argv``, run one subcommand and return its exit code.

    0 when every check passed, 1 when a check failed, 2 on invalid input,
    3 when an enumeration budget or the working precision ran out.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_OK if exit_.code in (0, None) else EXIT_USAGE

    try:
        cfg = CliConfig(
            p=args.p,
            precision=args.precision,
            seed=args.seed,
            format=args.format,
            out=args.out,
            log_level=args.log_level,
            log_file=args.log_file,
            log_format=args.log_format,
        )
    except InvalidInputError as err:
        stderr.write(f"hecke-afl: {err}\n")
        return EXIT_USAGE

    _setup_logging(cfg, args.command)
    logger.info("command started", **_tags.get_log_kwargs(LogType.CLI))

    try:
        payload, passed = HANDLERS[args.command](args, cfg)
    except (InvalidInputError, UnimplementedRegimeError) as err:
        return _fail("invalid input", err, EXIT_USAGE, stderr)
    except (BudgetExceededError, PrecisionError) as err:
        return _fail("budget or precision exhausted", err, EXIT_BUDGET, stderr)
    except (VerificationError, CriteriaDisagreeError) as err:
        return _fail("internal cross-check failed", err, EXIT_FAILED, stderr)

    emit(render(payload, cfg.format), cfg.out, stdout)
    code = EXIT_OK if passed else EXIT_FAILED
    logger.info("command finished", passed=passed, exit_code=code, **_tags.get_log_kwargs(LogType.CLI))
    return code


def main() -> int:
    return run(sys.argv[1:])


__all__ = ["CliConfig", "build_parser", "main", "run"]
