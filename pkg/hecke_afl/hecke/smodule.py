"""The Hecke module of the symmetric space S_2 (the n=1 case).

Basis: phi'_m = 1_{K' . t_m}, m >= 0, with t_m = [[0, p^m], [p^-m, 0]].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..exceptions import InvalidInputError
from ..symfun import QFIELD, Q, qlaurent, specialize_coefficient
from .unitary import UHecke, format_named, phi_combination


@dataclass(frozen=True, eq=False)
class SModuleElement:
    """Finite combination sum_m c_m phi'_m with coefficients in Q(q)."""

    coefficients: dict[int, Any]

    def __post_init__(self) -> None:
        clean = {}
        for index, coeff in self.coefficients.items():
            if index < 0:
                raise InvalidInputError(f"basis index must be non-negative, got {index}")
            coeff = qlaurent(coeff)
            if coeff:
                clean[index] = coeff
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def basis(cls, m: int) -> SModuleElement:
        return cls({m: 1})

    def coefficient(self, m: int) -> Any:
        return self.coefficients.get(m, QFIELD.zero)

    def __add__(self, other: SModuleElement) -> SModuleElement:
        out = dict(self.coefficients)
        for index, coeff in other.coefficients.items():
            out[index] = out.get(index, QFIELD.zero) + coeff
        return SModuleElement(out)

    def __neg__(self) -> SModuleElement:
        return SModuleElement({m: -c for m, c in self.coefficients.items()})

    def __sub__(self, other: SModuleElement) -> SModuleElement:
        return self + (-other)

    def scale(self, factor: Any) -> SModuleElement:
        factor = qlaurent(factor)
        return SModuleElement({m: c * factor for m, c in self.coefficients.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SModuleElement):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self.coefficients.items()))

    def max_index(self) -> int:
        return max(self.coefficients, default=-1)

    def specialize_q(self, q_value: Any) -> dict[int, Any]:
        return {m: specialize_coefficient(c, q_value) for m, c in self.coefficients.items()}

    def __str__(self) -> str:
        return format_named(self.coefficients, "phi'")


def _geometric(k: int) -> Any:
    return qlaurent(sum(Q**j for j in range(k + 1)))


def r_eta_star(m: int) -> SModuleElement:
    """Image of f'_m: (-1)^m sum_{i=0}^{m} (sum_{j=0}^{m-i} q^j) phi'_i; zero for m < 0."""
    if m < 0:
        return SModuleElement({})
    sign = -1 if m % 2 else 1
    return SModuleElement({i: _geometric(m - i) * sign for i in range(m + 1)})


def r_eta_star_combination(fprime_coeffs: dict[int, Any]) -> SModuleElement:
    """Linear extension of :func:`r_eta_star` to combinations of the f'_m."""
    total = SModuleElement({})
    for index, coeff in fprime_coeffs.items():
        total = total + r_eta_star(index).scale(coeff)
    return total


def r_eta_star_indicator(m: int) -> SModuleElement:
    """Image of 1_{K' diag(p^m,1) K'}: (-1)^m sum_i e_{m-i} phi'_i, e_0 = 1, e_k = q^k (1 + 1/q)."""
    if m < 0:
        raise InvalidInputError(f"m must be non-negative, got {m}")
    sign = -1 if m % 2 else 1
    coeffs = {}
    for i in range(m + 1):
        k = m - i
        weight = QFIELD.one if k == 0 else qlaurent(Q**k * (1 + 1 / Q))
        coeffs[i] = weight * sign
    return SModuleElement(coeffs)


def bc_S_eta_inverse(m: int) -> SModuleElement:
    """phi~'_m = (-1)^m (phi'_m + 2 phi'_{m-1} + ... + 2 phi'_0), the preimage of phi_m."""
    if m < 0:
        raise InvalidInputError(f"m must be non-negative, got {m}")
    sign = -1 if m % 2 else 1
    coeffs = {i: 2 * sign for i in range(m)}
    coeffs[m] = sign
    return SModuleElement(coeffs)


def tilde_coordinates(element: SModuleElement) -> dict[int, Any]:
    """Coordinates in the phi~'_m basis (phi~'_m has leading coefficient (-1)^m)."""
    remainder = element
    coords: dict[int, Any] = {}
    while remainder.coefficients:
        top = remainder.max_index()
        coeff = remainder.coefficient(top) * (-1 if top % 2 else 1)
        coords[top] = coeff
        remainder = remainder - bc_S_eta_inverse(top).scale(coeff)
    return coords


def bc_S_eta(element: SModuleElement) -> UHecke:
    """The map H_{K'_S} -> H_K of rank 2 sending phi~'_m to phi_m."""
    return phi_combination(tilde_coordinates(element))
