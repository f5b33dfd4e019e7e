"""Intersection numbers on the n = 1 Rapoport-Zink space, computed from fundamental invariants.

Int(g, phi_m) depends only on val(det A) = 2m + r for the fundamental matrix A
of the lattice spanned by g u_0 and p^m u_0, so no formal-scheme data appears here.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import structlog

from ..exceptions import InvalidInputError, UnimplementedRegimeError
from ..localfield import FieldElement, determinant, format_fraction
from ..logging_utils import LogTagging, LogType

logger = structlog.get_logger(__name__)
_tags = LogTagging({"component": "intersection"})


@dataclass(frozen=True)
class FundamentalMatrix:
    """Hermitian 2 x 2 matrix A = ((x_i, x_j)) of two vectors in the nonsplit hermitian space."""

    A: tuple[tuple[FieldElement, FieldElement], tuple[FieldElement, FieldElement]]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.A)
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise InvalidInputError("fundamental matrix must be 2 x 2")
        object.__setattr__(self, "A", rows)
        for i in range(2):
            for j in range(2):
                if rows[i][j] != rows[j][i].conj():
                    raise InvalidInputError(f"fundamental matrix is not hermitian at ({i}, {j})")
        if not self.det():
            raise InvalidInputError("fundamental matrix is singular")

    def det(self) -> FieldElement:
        return determinant(self.A)

    @property
    def invariants(self) -> tuple[int, int]:
        return fundamental_invariants(self)

    @classmethod
    def from_vectors(
        cls,
        vectors: Sequence[Sequence[FieldElement]],
        gram: Sequence[FieldElement | int],
    ) -> FundamentalMatrix:
        """((x_i, x_j)) for the form (x, y) = sum gram_k conj(x_k) y_k."""
        rows = tuple(
            tuple(
                sum((x[k].conj() * y[k] * gram[k] for k in range(len(gram))), start=0 * x[0])
                for y in vectors
            )
            for x in vectors
        )
        return cls(rows)  # type: ignore[arg-type]


def fundamental_invariants(matrix: FundamentalMatrix) -> tuple[int, int]:
    """(a_1, a_2), a_1 <= a_2: a_1 the minimal entry valuation, a_1 + a_2 = val(det A)."""
    a1 = int(min(entry.valuation() for row in matrix.A for entry in row if entry))
    total = int(matrix.det().valuation())
    return a1, total - a1


def fundamental_matrix(a: FieldElement, m: int) -> FundamentalMatrix:
    """A for the lattice spanned by g u_0 and p^m u_0, g u_0 having first coordinate a.

    A = [[1, conj(a) p^m], [a p^m, p^{2m}]], with det A = p^{2m}(1 - a conj(a)).
    """
    if m < 0:
        raise InvalidInputError(f"m must be non-negative, got {m}")
    config = a.config
    scale = FieldElement.of(config.p**m, config)
    one = FieldElement.of(1, config)
    return FundamentalMatrix(((one, a.conj() * scale), (a * scale, scale * scale)))


def kr_pairing(invariants: tuple[int, int]) -> Fraction:
    """<Z(x_1), Z(x_2)> = (a_2 + 1)/2 for fundamental invariants (0, a_2) with a_2 odd.

    Raises:
        UnimplementedRegimeError: outside the (0, odd) regime.
    """
    a1, a2 = invariants
    if a1 != 0 or a2 % 2 == 0:
        raise UnimplementedRegimeError(f"pairing implemented only for invariants (0, odd), got {invariants}")
    return Fraction(a2 + 1, 2)


@dataclass(frozen=True)
class IntersectionResult:
    value: Fraction
    r: int
    m: int

    def as_dict(self) -> dict[str, object]:
        return {"r": self.r, "m": self.m, "int_value": format_fraction(self.value)}


def _check_regime(r: int, m: int) -> None:
    if r < 1 or r % 2 == 0:
        raise InvalidInputError(f"r must be odd and positive, got {r}")
    if m < 0:
        raise InvalidInputError(f"m must be non-negative, got {m}")


def int_g_phi(r: int, m: int) -> IntersectionResult:
    """Int(g, phi_m) for g with v(1 - a conj(a)) = r.

    phi_m acts through the difference divisor Z(p^m u_0) - Z(p^{m-1} u_0) when
    m >= 1, and through Z(u_0) when m = 0.
    """
    _check_regime(r, m)
    value = kr_pairing((0, 2 * m + r))
    if m >= 1:
        value -= kr_pairing((0, 2 * (m - 1) + r))
    return IntersectionResult(value, r, m)


def int_g_phi_at(a: FieldElement, m: int) -> IntersectionResult:
    """Int(g, phi_m) read off the fundamental matrices of g u_0 = (a, *)."""
    r = int((1 - a.norm()).valuation())
    _check_regime(r, m)
    value = kr_pairing(fundamental_invariants(fundamental_matrix(a, m)))
    if m >= 1:
        value -= kr_pairing(fundamental_invariants(fundamental_matrix(a, m - 1)))
    logger.debug(
        "intersection number computed",
        r=r,
        m=m,
        value=format_fraction(value),
        **_tags.get_log_kwargs(LogType.VERIFICATION),
    )
    return IntersectionResult(value, r, m)
