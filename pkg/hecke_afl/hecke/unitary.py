"""Spherical Hecke algebra of U_n: explicit elements, base change, q-binomials."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Any

from ..exceptions import InvalidInputError, RankMismatchError, VerificationError
from ..symfun import (
    QFIELD,
    LaurentPoly,
    Q,
    USatakeElement,
    elementary_symmetric,
    format_qlaurent,
    qlaurent,
    reduce_signed_symmetric,
    u_variables,
)
from .gl import GLHecke, convolve


@dataclass(frozen=True, eq=False)
class UHecke:
    """Element of H_K for the unitary group, stored as its Satake transform.

    ``basis_coeffs`` optionally records the expansion in the f^[t] basis;
    it is checked against ``sat`` at construction.
    """

    n: int
    sat: USatakeElement
    basis_coeffs: dict[int, Any] | None = field(default=None)
    q_value: int | None = None

    def __post_init__(self) -> None:
        if self.sat.n != self.n:
            raise RankMismatchError(f"Satake element of rank {self.sat.n} for n={self.n}")
        if self.basis_coeffs is not None:
            expected = fbracket_combination(self.n, self.basis_coeffs)
            if self.q_value is not None:
                expected = expected.specialize_q(self.q_value)
            if expected != self.sat:
                raise VerificationError("basis coefficients do not reproduce the Satake form")

    @classmethod
    def one(cls, n: int) -> UHecke:
        return cls(n, USatakeElement.constant(n, 1))

    def _check(self, other: UHecke) -> None:
        if not isinstance(other, UHecke):
            raise InvalidInputError(f"cannot combine UHecke with {type(other).__name__}")
        if other.n != self.n:
            raise RankMismatchError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: UHecke) -> UHecke:
        self._check(other)
        return UHecke(self.n, self.sat + other.sat)

    def __sub__(self, other: UHecke) -> UHecke:
        self._check(other)
        return UHecke(self.n, self.sat - other.sat)

    def __neg__(self) -> UHecke:
        return UHecke(self.n, -self.sat)

    def scale(self, coeff: Any) -> UHecke:
        return UHecke(self.n, self.sat * qlaurent(coeff))

    def __mul__(self, other: UHecke) -> UHecke:
        return convolve(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UHecke):
            return NotImplemented
        return self.n == other.n and self.sat == other.sat

    def __hash__(self) -> int:
        return hash(("UHecke", self.n, self.sat))

    def __str__(self) -> str:
        return self.sat.to_text()

    def named_text(self) -> str:
        """Expansion in the f^[t] basis, e.g. ``f[2] + 4*f[0]``."""
        coeffs = self.basis_coeffs if self.basis_coeffs is not None else fbracket_coordinates(self)
        return format_named(coeffs, "f")


def format_named(coeffs: dict[int, Any], symbol: str) -> str:
    """``c*f[t] + ...`` with indices descending; coefficients in Q[q, 1/q]."""
    parts: list[str] = []
    for index in sorted(coeffs, reverse=True):
        coeff = qlaurent(coeffs[index])
        if not coeff:
            continue
        text = format_qlaurent(coeff)
        name = f"{symbol}[{index}]"
        if text == "1":
            body, sign = name, "+"
        elif text == "-1":
            body, sign = name, "-"
        elif " " in text:
            body, sign = f"({text})*{name}", "+"
        elif text.startswith("-"):
            body, sign = f"{text[1:]}*{name}", "-"
        else:
            body, sign = f"{text}*{name}", "+"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts) if parts else "0"


def _u2_from_u(poly: LaurentPoly) -> UHecke:
    return UHecke(2, reduce_signed_symmetric(poly, 2))


def sat_u2_f(m: int) -> UHecke:
    """Sat(f_m) = q^m sum_{i=-m}^{m} X^i; zero for m < 0."""
    if m < 0:
        return UHecke(2, USatakeElement.constant(2, 0))
    terms = {(i,): Q**m for i in range(-m, m + 1)}
    return _u2_from_u(LaurentPoly(u_variables(1), terms))


def sat_u2_phi(m: int) -> UHecke:
    """Sat(phi_m) = Sat(f_m) - Sat(f_{m-1}); phi_0 = 1."""
    if m < 0:
        return UHecke(2, USatakeElement.constant(2, 0))
    return sat_u2_f(m) - sat_u2_f(m - 1)


@lru_cache(maxsize=None)
def _qbinom_q(n: int, m: int) -> Any:
    if m == 0 or m == n:
        return QFIELD.one
    return _qbinom_q(n - 1, m - 1) + qlaurent(Q**m) * _qbinom_q(n - 1, m)


def qbinom(n: int, m: int, base: str = "q") -> Any:
    """Gaussian binomial [n; m] in base q or -q, as an element of Q[q].

    Raises:
        InvalidInputError: unless 0 <= m <= n and base is ``"q"`` or ``"-q"``.
    """
    if not 0 <= m <= n:
        raise InvalidInputError(f"qbinom needs 0 <= m <= n, got n={n}, m={m}")
    value = _qbinom_q(n, m)
    if base == "q":
        return value
    if base == "-q":
        return QFIELD.from_sympy(QFIELD.to_sympy(value).subs(Q, -Q).expand())
    raise InvalidInputError(f"base must be 'q' or '-q', got {base!r}")


def chi_rho(n: int, s: int) -> USatakeElement:
    """Restriction of the character of the s-th fundamental representation, in s-coordinates."""
    m = n // 2
    if not 0 <= s <= m:
        raise InvalidInputError(f"chi_rho needs 0 <= s <= {m}, got {s}")
    result = USatakeElement.constant(n, 0)
    if n % 2 == 0:
        for j in range(s // 2 + 1):
            result = result + USatakeElement.frak_s(n, s - 2 * j) * comb(m - (s - 2 * j), j)
    else:
        for i in range(s + 1):
            result = result + USatakeElement.frak_s(n, s - i) * comb(m - (s - i), i // 2)
    return result


def _check_bracket(n: int, t: int) -> None:
    if t % 2 or not 0 <= t <= n:
        raise InvalidInputError(f"t must be even with 0 <= t <= n, got n={n}, t={t}")


@lru_cache(maxsize=None)
def _sat_f_bracket(n: int, s: int) -> USatakeElement:
    value = chi_rho(n, s) * qlaurent(Q ** (s * (n - s)))
    for i in range(s):
        value = value - _sat_f_bracket(n, i) * qbinom(n - 2 * i, s - i, "-q")
    return value


def sat_f_bracket(n: int, t: int) -> UHecke:
    """Sat(f^[t]) from the unitriangular system with q-binomials in base -q."""
    _check_bracket(n, t)
    return UHecke(n, _sat_f_bracket(n, t // 2))


def fbracket_combination(n: int, coeffs: dict[int, Any]) -> USatakeElement:
    total = USatakeElement.constant(n, 0)
    for t, coeff in coeffs.items():
        _check_bracket(n, t)
        total = total + _sat_f_bracket(n, t // 2) * qlaurent(coeff)
    return total


def fbracket_coordinates(element: UHecke) -> dict[int, Any]:
    """Coordinates of an element of the span of the f^[t] in that basis.

    Raises:
        InvalidInputError: when the element is not linear in the s_k.
    """
    n, m = element.n, element.n // 2
    remainder = element.sat
    coords: dict[int, Any] = {}
    for s in range(m, 0, -1):
        mono = tuple(1 if k == s - 1 else 0 for k in range(m))
        coeff = remainder.poly.coefficient(mono)
        if coeff:
            c = coeff / qlaurent(Q ** (s * (n - s)))
            coords[2 * s] = c
            remainder = remainder - _sat_f_bracket(n, s) * c
    constant = remainder.poly.coefficient((0,) * m)
    if constant:
        coords[0] = constant
    remainder = remainder - USatakeElement.constant(n, constant)
    if remainder:
        raise InvalidInputError("element is not in the span of the f^[t]")
    return coords


def phi_coordinates(element: UHecke) -> dict[int, Any]:
    """Coordinates of an n=2 element in the phi_m basis (leading term q^m s1^m)."""
    if element.n != 2:
        raise InvalidInputError("phi coordinates are defined for n = 2")
    remainder = element.sat
    coords: dict[int, Any] = {}
    while remainder:
        degree = max(mono[0] for mono in remainder.poly.terms())
        coeff = remainder.poly.coefficient((degree,)) / qlaurent(Q**degree)
        coords[degree] = coeff
        remainder = remainder - sat_u2_phi(degree).sat * coeff
    return coords


def phi_combination(coords: dict[int, Any]) -> UHecke:
    total = UHecke(2, USatakeElement.constant(2, 0))
    for index, coeff in coords.items():
        total = total + sat_u2_phi(index).scale(coeff)
    return total


@lru_cache(maxsize=None)
def _bc_images(n: int) -> tuple[LaurentPoly, ...]:
    m = n // 2
    names = u_variables(m)
    us = [LaurentPoly.variable(names, j) for j in range(m)]
    middle = [LaurentPoly.constant(names, 1)] if n % 2 else []
    params = us + middle + [u.inverse_monomial() for u in reversed(us)]
    return tuple(elementary_symmetric(k, params) for k in range(1, n + 1))


def bc(element: GLHecke) -> UHecke:
    """Base change H_{K'}(GL_n) -> H_K(U_n): restrict Satake parameters to
    (u_1, ..., u_m, [1], 1/u_m, ..., 1/u_1)."""
    n = element.n
    expanded = element.sat.poly.compose(list(_bc_images(n)), u_variables(n // 2))
    return UHecke(n, reduce_signed_symmetric(expanded, n))
