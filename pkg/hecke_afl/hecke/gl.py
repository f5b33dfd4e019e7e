"""Spherical Hecke algebra of GL_n(F) in Satake coordinates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..exceptions import InvalidInputError, RankMismatchError
from ..symfun import GLSatakeElement, LaurentPoly, Q, gl_variables, qlaurent, reduce_symmetric


@dataclass(frozen=True, eq=False)
class GLHecke:
    """Element of H_{K'}, K' = GL_n(O_F), stored as its Satake transform."""

    n: int
    sat: GLSatakeElement

    def __post_init__(self) -> None:
        if self.sat.n != self.n:
            raise RankMismatchError(f"Satake element of rank {self.sat.n} for n={self.n}")

    @classmethod
    def one(cls, n: int) -> GLHecke:
        return cls(n, GLSatakeElement.constant(n, 1))

    def _check(self, other: GLHecke) -> None:
        if not isinstance(other, GLHecke):
            raise InvalidInputError(f"cannot combine GLHecke with {type(other).__name__}")
        if other.n != self.n:
            raise RankMismatchError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: GLHecke) -> GLHecke:
        self._check(other)
        return GLHecke(self.n, self.sat + other.sat)

    def __sub__(self, other: GLHecke) -> GLHecke:
        self._check(other)
        return GLHecke(self.n, self.sat - other.sat)

    def __neg__(self) -> GLHecke:
        return GLHecke(self.n, -self.sat)

    def scale(self, coeff: Any) -> GLHecke:
        return GLHecke(self.n, self.sat * qlaurent(coeff))

    def __mul__(self, other: GLHecke) -> GLHecke:
        return convolve(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GLHecke):
            return NotImplemented
        return self.n == other.n and self.sat == other.sat

    def __hash__(self) -> int:
        return hash(("GLHecke", self.n, self.sat))

    def __str__(self) -> str:
        return self.sat.to_text()


def convolve(left: Any, right: Any) -> Any:
    """Convolution product; the Satake transform turns it into multiplication.

    Raises:
        RankMismatchError: when the ranks differ.
    """
    if type(left) is not type(right):
        raise InvalidInputError(
            f"cannot convolve {type(left).__name__} with {type(right).__name__}",
        )
    if left.n != right.n:
        raise RankMismatchError(f"rank mismatch: {left.n} vs {right.n}")
    return type(left)(left.n, left.sat * right.sat)


def sat_gl_minuscule(n: int, i: int) -> GLHecke:
    """Sat(1_{K' diag(p,...,p,1,...,1) K'}) with i entries p: q^{i(n-i)} sigma_i."""
    if not 0 <= i <= n:
        raise InvalidInputError(f"minuscule index {i} out of range for n={n}")
    return GLHecke(n, GLSatakeElement.sigma(n, i) * qlaurent(Q ** (i * (n - i))))


def _gl2_from_x(poly: LaurentPoly) -> GLHecke:
    return GLHecke(2, reduce_symmetric(poly))


def sat_gl2_fprime(m: int) -> GLHecke:
    """Sat(f'_m) = q^m (X^{m+1} - Y^{m+1}) / (X - Y); zero for m < 0."""
    names = gl_variables(2)
    if m < 0:
        return GLHecke(2, GLSatakeElement.constant(2, 0))
    terms = {(a, m - a): Q**m for a in range(m + 1)}
    return _gl2_from_x(LaurentPoly(names, terms))


def sat_gl2_indicator(m: int) -> GLHecke:
    """Sat(1_{K' diag(p^m, 1) K'}) = Sat(f'_m) - Sat(p f'_{m-2})."""
    if m < 0:
        raise InvalidInputError(f"m must be non-negative, got {m}")
    central = GLSatakeElement.sigma(2, 2)
    lower = sat_gl2_fprime(m - 2).sat * central
    return GLHecke(2, sat_gl2_fprime(m).sat - lower)


def eta_twist(element: GLHecke) -> GLHecke:
    """Substitute x_i -> -x_i, i.e. sigma_i -> (-1)^i sigma_i."""
    def sign(mono: tuple[int, ...]) -> int:
        return -1 if sum((i + 1) * e for i, e in enumerate(mono)) % 2 else 1

    terms = {mono: coeff * sign(mono) for mono, coeff in element.sat.poly.terms().items()}
    poly = LaurentPoly(element.sat.poly.names, terms, element.sat.poly.domain)
    return GLHecke(element.n, GLSatakeElement(element.n, poly))
