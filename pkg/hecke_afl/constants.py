"""Shared defaults and keys."""
import math
import os

DEFAULT_PRIME = 3
DEFAULT_PRECISION = 32
MIN_CLI_PRECISION = 8
DEFAULT_SEED = 0

# margin added to r when realizing matched unitary elements mod p^N
MATCHING_PRECISION_MARGIN = 8

DEFAULT_ENUMERATION_BUDGET = 5_000_000
DEFAULT_WINDOW_RADIUS = 2

DEFAULT_FL_ODD_SAMPLES = 100
DEFAULT_FL_EVEN_SAMPLES = 50

JSON_SCHEMA_VERSION = 1
THREADS_ENV_VAR = "HECKE_AFL_THREADS"

# valuation of zero
VAL_INFINITY = math.inf

Q_SYMBOL_NAME = "q"
DELTA_SYMBOL_NAME = "d"
GL_GENERATOR_PREFIX = "sigma"
U_GENERATOR_PREFIX = "s"
GL_VARIABLE_PREFIX = "x"
U_VARIABLE_PREFIX = "u"
ORBITAL_VARIABLE = "Z"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# report kinds
KIND_FL = "FL"
KIND_AFL = "AFL"
KIND_KERNEL = "KERNEL"
KIND_COMM = "COMM"
KIND_COPRIME = "COPRIME"
KIND_INJECTIVITY = "INJECTIVITY"

COPRIMALITY_PRIMES = (3, 5, 7, 11, 13)


def worker_count() -> int:
    """Number of worker processes allowed, capped by ``HECKE_AFL_THREADS``."""
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return max(1, os.cpu_count() or 1)
