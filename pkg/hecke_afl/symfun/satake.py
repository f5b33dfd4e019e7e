"""Satake target rings and symmetric-function reduction.

GL flavour: C[x_1^{+-1}, ..., x_n^{+-1}]^{S_n} = Q(q)[sigma_1, ..., sigma_{n-1}, sigma_n^{+-1}].
U flavour: C[u_1^{+-1}, ..., u_m^{+-1}]^{W_n} = Q(q)[s_1, ..., s_m] with
s_k the elementary symmetric functions of y_j = u_j + 1/u_j.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Any

import structlog

from ..constants import (
    GL_GENERATOR_PREFIX,
    GL_VARIABLE_PREFIX,
    U_GENERATOR_PREFIX,
    U_VARIABLE_PREFIX,
)
from ..exceptions import InvalidInputError, NotInvariantError, NotSymmetricError
from ..logging_utils import LogTagging, LogType
from .laurent import QFIELD, LaurentPoly, Monomial
from .text import format_laurent, parse_laurent

logger = structlog.get_logger(__name__)
_tags = LogTagging({"component": "symfun"})


@lru_cache(maxsize=None)
def gl_variables(n: int) -> tuple[str, ...]:
    return tuple(f"{GL_VARIABLE_PREFIX}{i}" for i in range(1, n + 1))


@lru_cache(maxsize=None)
def gl_generators(n: int) -> tuple[str, ...]:
    return tuple(f"{GL_GENERATOR_PREFIX}{i}" for i in range(1, n + 1))


@lru_cache(maxsize=None)
def u_variables(m: int) -> tuple[str, ...]:
    return tuple(f"{U_VARIABLE_PREFIX}{i}" for i in range(1, m + 1))


@lru_cache(maxsize=None)
def u_generators(m: int) -> tuple[str, ...]:
    return tuple(f"{U_GENERATOR_PREFIX}{i}" for i in range(1, m + 1))


def elementary_symmetric(k: int, values: list[LaurentPoly]) -> LaurentPoly:
    """e_k(values) as a Laurent polynomial; e_0 = 1."""
    names = values[0].names if values else ()
    total = LaurentPoly.zero(names)
    for combo in combinations(values, k):
        term = LaurentPoly.constant(names, 1)
        for factor in combo:
            term = term * factor
        total = total + term
    return total


@lru_cache(maxsize=None)
def _x_elementary(n: int) -> tuple[LaurentPoly, ...]:
    xs = [LaurentPoly.variable(gl_variables(n), i) for i in range(n)]
    return tuple(elementary_symmetric(k, xs) for k in range(1, n + 1))


@lru_cache(maxsize=None)
def y_variables(m: int) -> tuple[LaurentPoly, ...]:
    names = u_variables(m)
    return tuple(
        LaurentPoly.variable(names, j) + LaurentPoly.variable(names, j).inverse_monomial()
        for j in range(m)
    )


@lru_cache(maxsize=None)
def _y_elementary(m: int) -> tuple[LaurentPoly, ...]:
    ys = list(y_variables(m))
    return tuple(elementary_symmetric(k, ys) for k in range(1, m + 1))


class _PowerCache:
    """Products of powers of fixed Laurent polynomials, memoized per exponent."""

    def __init__(self, bases: tuple[LaurentPoly, ...], names: tuple[str, ...]) -> None:
        self.bases = bases
        self.names = names
        self._powers: dict[tuple[int, int], LaurentPoly] = {}

    def power(self, index: int, exponent: int) -> LaurentPoly:
        key = (index, exponent)
        if key not in self._powers:
            self._powers[key] = self.bases[index] ** exponent
        return self._powers[key]

    def product(self, exponents: Monomial) -> LaurentPoly:
        result = LaurentPoly.constant(self.names, 1)
        for index, exponent in enumerate(exponents):
            if exponent:
                result = result * self.power(index, exponent)
        return result


@dataclass(frozen=True, eq=False)
class _SatakeBase:
    n: int
    poly: LaurentPoly

    def _same(self, other: Any) -> Any:
        if isinstance(other, type(self)):
            if other.n != self.n:
                raise InvalidInputError(f"rank mismatch: {self.n} vs {other.n}")
            return other.poly
        return other

    def __add__(self, other: Any) -> Any:
        return type(self)(self.n, self.poly + self._same(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> Any:
        return type(self)(self.n, self.poly - self._same(other))

    def __rsub__(self, other: Any) -> Any:
        return type(self)(self.n, self._same(other) - self.poly)

    def __neg__(self) -> Any:
        return type(self)(self.n, -self.poly)

    def __mul__(self, other: Any) -> Any:
        return type(self)(self.n, self.poly * self._same(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Any:
        return type(self)(self.n, self.poly**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, type(self)):
            return self.n == other.n and self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n, self.poly))

    def __bool__(self) -> bool:
        return bool(self.poly)

    def to_text(self) -> str:
        return format_laurent(self.poly)

    def __str__(self) -> str:
        return self.to_text()

    def specialize_q(self, q_value: Any) -> Any:
        return type(self)(self.n, self.poly.specialize_q(q_value))


class GLSatakeElement(_SatakeBase):
    """Polynomial in sigma_1..sigma_{n-1}, sigma_n^{+-1} over Q(q)."""

    @classmethod
    def constant(cls, n: int, value: Any) -> GLSatakeElement:
        return cls(n, LaurentPoly.constant(gl_generators(n), value))

    @classmethod
    def sigma(cls, n: int, i: int) -> GLSatakeElement:
        """sigma_i, with sigma_0 = 1."""
        if not 0 <= i <= n:
            raise InvalidInputError(f"sigma index {i} out of range for n={n}")
        if i == 0:
            return cls.constant(n, 1)
        return cls(n, LaurentPoly.variable(gl_generators(n), i - 1))

    @classmethod
    def from_text(cls, n: int, text: str) -> GLSatakeElement:
        return cls(n, parse_laurent(text, gl_generators(n)))

    def expand(self) -> LaurentPoly:
        """Laurent polynomial in x_1..x_n."""
        return self.poly.compose(list(_x_elementary(self.n)), gl_variables(self.n))

    def evaluate(self, point: list[Any], q_value: Any = None) -> Fraction:
        return self.expand().evaluate(point, q_value)


class USatakeElement(_SatakeBase):
    """Polynomial in s_1..s_m over Q(q), m = floor(n/2)."""

    @property
    def m(self) -> int:
        return self.n // 2

    @classmethod
    def constant(cls, n: int, value: Any) -> USatakeElement:
        return cls(n, LaurentPoly.constant(u_generators(n // 2), value))

    @classmethod
    def frak_s(cls, n: int, k: int) -> USatakeElement:
        """s_k, with s_0 = 1."""
        m = n // 2
        if not 0 <= k <= m:
            raise InvalidInputError(f"s index {k} out of range for n={n}")
        if k == 0:
            return cls.constant(n, 1)
        return cls(n, LaurentPoly.variable(u_generators(m), k - 1))

    @classmethod
    def from_text(cls, n: int, text: str) -> USatakeElement:
        return cls(n, parse_laurent(text, u_generators(n // 2)))

    def expand(self) -> LaurentPoly:
        """Laurent polynomial in u_1..u_m."""
        if self.m == 0:
            return LaurentPoly(u_variables(0), self.poly.terms())
        return self.poly.compose(list(_y_elementary(self.m)), u_variables(self.m))

    def evaluate(self, point: list[Any], q_value: Any = None) -> Fraction:
        return self.expand().evaluate(point, q_value)


def is_symmetric(poly: LaurentPoly) -> bool:
    return all(poly.swap(i, i + 1) == poly for i in range(poly.nvars - 1))


def is_signed_symmetric(poly: LaurentPoly) -> bool:
    if poly.nvars == 0:
        return True
    return is_symmetric(poly) and poly.invert_variable(0) == poly


def reduce_symmetric(poly: LaurentPoly) -> GLSatakeElement:
    """Write a symmetric Laurent polynomial in x_1..x_n in the sigma basis.

    Raises:
        NotSymmetricError: when a transposition changes ``poly``.
    """
    n = poly.nvars
    if poly.names != gl_variables(n):
        poly = LaurentPoly(gl_variables(n), poly.terms(), poly.domain)
    if not is_symmetric(poly):
        raise NotSymmetricError("polynomial is not invariant under S_n")
    shift = max(0, -poly.min_exponent())
    remainder = poly * LaurentPoly.monomial(poly.names, (shift,) * n)
    cache = _PowerCache(_x_elementary(n), gl_variables(n))
    out: dict[Monomial, Any] = {}
    steps = 0
    while remainder:
        mono, coeff = remainder.leading_term()
        exps = tuple(mono[i] - mono[i + 1] for i in range(n - 1)) + (mono[n - 1],)
        if any(e < 0 for e in exps):
            raise NotSymmetricError(f"leading monomial {mono} is not dominant")
        out[exps[:-1] + (exps[-1] - shift,)] = coeff
        remainder = remainder - cache.product(exps) * coeff
        steps += 1
    logger.debug(
        "symmetric reduction finished",
        n=n,
        steps=steps,
        **_tags.get_log_kwargs(LogType.ARITHMETIC),
    )
    return GLSatakeElement(n, LaurentPoly(gl_generators(n), out, poly.domain))


def reduce_signed_symmetric(poly: LaurentPoly, n: int | None = None) -> USatakeElement:
    """Write a W_n-invariant Laurent polynomial in u_1..u_m in the s basis.

    Args:
        poly: Laurent polynomial in m variables.
        n: Rank of the unitary group; defaults to 2m.

    Raises:
        NotInvariantError: when ``poly`` is not invariant under signed permutations.
    """
    m = poly.nvars
    n = 2 * m if n is None else n
    if n // 2 != m:
        raise InvalidInputError(f"rank {n} does not have {m} Satake variables")
    if poly.names != u_variables(m):
        poly = LaurentPoly(u_variables(m), poly.terms(), poly.domain)
    if not is_signed_symmetric(poly):
        raise NotInvariantError("polynomial is not invariant under signed permutations")
    if m == 0:
        return USatakeElement(n, LaurentPoly(u_generators(0), poly.terms(), poly.domain))
    cache = _PowerCache(_y_elementary(m), u_variables(m))
    out: dict[Monomial, Any] = {}
    remainder = poly
    while remainder:
        mono, coeff = remainder.leading_term()
        exps = tuple(mono[i] - mono[i + 1] for i in range(m - 1)) + (mono[m - 1],)
        if any(e < 0 for e in exps):
            raise NotInvariantError(f"leading monomial {mono} is not dominant")
        out[exps] = coeff
        remainder = remainder - cache.product(exps) * coeff
    return USatakeElement(n, LaurentPoly(u_generators(m), out, poly.domain))


def evaluate(element: Any, point: list[Any], q_value: Any = None) -> Fraction:
    """Exact value of a Laurent polynomial or Satake element at a Satake parameter."""
    if isinstance(element, (GLSatakeElement, USatakeElement, LaurentPoly)):
        return element.evaluate(point, q_value)
    raise InvalidInputError(f"cannot evaluate {type(element).__name__}")


__all__ = [
    "QFIELD",
    "GLSatakeElement",
    "USatakeElement",
    "elementary_symmetric",
    "evaluate",
    "gl_generators",
    "gl_variables",
    "is_signed_symmetric",
    "is_symmetric",
    "reduce_signed_symmetric",
    "reduce_symmetric",
    "u_generators",
    "u_variables",
    "y_variables",
]
