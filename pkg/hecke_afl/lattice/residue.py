"""The residue field F_{q^2} = F_p(delta) and hermitian linear algebra over it.

Elements are integer codes ``a + b*p`` for a + b*delta, 0 <= a, b < p.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import structlog

from ..constants import DEFAULT_ENUMERATION_BUDGET
from ..exceptions import BudgetExceededError, InvalidInputError
from ..logging_utils import LogTagging, LogType

logger = structlog.get_logger(__name__)
_tags = LogTagging({"component": "lattice"})

Vector = tuple[int, ...]


class ResidueField:
    """Table-driven arithmetic in F_p(delta), delta^2 = epsilon."""

    def __init__(self, p: int, epsilon: int) -> None:
        self.p = p
        self.epsilon = epsilon % p
        self.size = p * p
        size = self.size
        self.add = [[0] * size for _ in range(size)]
        self.mul = [[0] * size for _ in range(size)]
        self.neg = [0] * size
        self.conj = [0] * size
        self.norm = [0] * size
        for c1 in range(size):
            a1, b1 = c1 % p, c1 // p
            self.neg[c1] = (-a1) % p + ((-b1) % p) * p
            self.conj[c1] = a1 + ((-b1) % p) * p
            self.norm[c1] = (a1 * a1 - self.epsilon * b1 * b1) % p
            for c2 in range(size):
                a2, b2 = c2 % p, c2 // p
                self.add[c1][c2] = (a1 + a2) % p + ((b1 + b2) % p) * p
                self.mul[c1][c2] = (
                    (a1 * a2 + self.epsilon * b1 * b2) % p
                    + ((a1 * b2 + a2 * b1) % p) * p
                )
        self.inv = [0] * size
        for c1 in range(1, size):
            self.inv[c1] = next(c2 for c2 in range(1, size) if self.mul[c1][c2] == 1)
        # some element of each norm value in F_p^x
        self.norm_preimage: dict[int, int] = {}
        for code in range(1, size):
            self.norm_preimage.setdefault(self.norm[code], code)

    def code(self, a: int, b: int) -> int:
        return a % self.p + (b % self.p) * self.p

    def components(self, code: int) -> tuple[int, int]:
        return code % self.p, code // self.p

    def sub(self, x: int, y: int) -> int:
        return self.add[x][self.neg[y]]

    def hermitian(self, u: Sequence[int], v: Sequence[int]) -> int:
        """sum conj(u_i) v_i."""
        total = 0
        for a, b in zip(u, v):
            if a and b:
                total = self.add[total][self.mul[self.conj[a]][b]]
        return total

    def form(self, u: Sequence[int], gram: Sequence[Sequence[int]], v: Sequence[int]) -> int:
        """u^* G v."""
        gv = [self.dot(row, v) for row in gram]
        return self.hermitian(u, gv)

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        total = 0
        for a, b in zip(u, v):
            if a and b:
                total = self.add[total][self.mul[a][b]]
        return total

    def scale(self, c: int, v: Sequence[int]) -> Vector:
        row = self.mul[c]
        return tuple(row[x] for x in v)

    def axpy(self, c: int, x: Sequence[int], y: Sequence[int]) -> Vector:
        """y + c*x."""
        row = self.mul[c]
        return tuple(self.add[b][row[a]] for a, b in zip(x, y))

    def rref(self, rows: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
        """Reduced row echelon form with unit pivots; zero rows dropped."""
        work = [list(r) for r in rows]
        if not work:
            return ()
        ncols = len(work[0])
        pivot_row = 0
        for col in range(ncols):
            found = next((r for r in range(pivot_row, len(work)) if work[r][col]), None)
            if found is None:
                continue
            work[pivot_row], work[found] = work[found], work[pivot_row]
            inv = self.inv[work[pivot_row][col]]
            work[pivot_row] = list(self.scale(inv, work[pivot_row]))
            for r in range(len(work)):
                if r != pivot_row and work[r][col]:
                    work[r] = list(self.axpy(self.neg[work[r][col]], work[pivot_row], work[r]))
            pivot_row += 1
            if pivot_row == len(work):
                break
        return tuple(tuple(r) for r in work[:pivot_row])

    def nullspace(self, rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
        """Basis of {x : rows . x = 0}."""
        reduced = self.rref(rows)
        pivots = [next(i for i, c in enumerate(r) if c) for r in reduced]
        free = [c for c in range(ncols) if c not in pivots]
        basis = []
        for f in free:
            x = [0] * ncols
            x[f] = 1
            for r, pc in zip(reduced, pivots):
                x[pc] = self.neg[r[f]]
            basis.append(tuple(x))
        return basis

    def hermitian_frame(self, gram: Sequence[Sequence[int]]) -> tuple[list[Vector], list[Vector]]:
        """Orthonormal vectors f_i (h(f_i, f_j) = delta_ij) and a basis of the radical.

        Together they form a basis of F^n.
        """
        n = len(gram)
        pending = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
        frame: list[Vector] = []
        while pending:
            anisotropic = next(
                (i for i, v in enumerate(pending) if self.form(v, gram, v)), None,
            )
            if anisotropic is None:
                pair = next(
                    (
                        (i, j)
                        for i in range(len(pending))
                        for j in range(i + 1, len(pending))
                        if self.form(pending[i], gram, pending[j])
                    ),
                    None,
                )
                if pair is None:
                    break
                i, j = pair
                lam = self.inv[self.form(pending[i], gram, pending[j])]
                pending[i] = self.axpy(lam, pending[j], pending[i])
                anisotropic = i
            v = pending.pop(anisotropic)
            value = self.form(v, gram, v)
            if value >= self.p:
                raise InvalidInputError("gram matrix is not hermitian")
            mu = self.norm_preimage[pow(value, -1, self.p)]
            f = self.scale(mu, v)
            frame.append(f)
            pending = [self.axpy(self.neg[self.form(f, gram, w)], f, w) for w in pending]
        return frame, pending


@lru_cache(maxsize=None)
def residue_field(p: int, epsilon: int) -> ResidueField:
    return ResidueField(p, epsilon)


@dataclass(frozen=True, slots=True)
class _Enumeration:
    subspaces: tuple[tuple[Vector, ...], ...]
    # largest level set met on the way, the quantity the budget bounds
    peak: int


_CACHE_SIZE = 64
_cache: dict[tuple[int, int, int, int], _Enumeration] = {}


def _over_budget(count: int, budget: int, what: str) -> BudgetExceededError:
    return BudgetExceededError(f"more than {budget} isotropic {what} (reached {count})")


def _isotropic_lines(field: ResidueField, dim: int, budget: int) -> Iterator[Vector]:
    """Isotropic lines in RREF, stopping as soon as more than ``budget`` turn up."""
    found = 0
    for lead in range(dim):
        for tail in product(range(field.size), repeat=dim - lead - 1):
            v = (0,) * lead + (1,) + tail
            if field.hermitian(v, v):
                continue
            found += 1
            if found > budget:
                raise _over_budget(found, budget, "lines")
            yield v


def _enumerate(field: ResidueField, dim: int, k: int, budget: int) -> _Enumeration:
    lines = list(_isotropic_lines(field, dim, budget))
    level: set[tuple[Vector, ...]] = {(v,) for v in lines}
    peak = len(level)
    for j in range(1, k):
        nxt: set[tuple[Vector, ...]] = set()
        for subspace in level:
            for v in lines:
                if any(field.hermitian(s, v) for s in subspace):
                    continue
                extended = field.rref(list(subspace) + [v])
                if len(extended) == len(subspace) + 1:
                    nxt.add(extended)
                    if len(nxt) > budget:
                        raise _over_budget(len(nxt), budget, f"{j + 1}-subspaces")
        level = nxt
        peak = max(peak, len(level))
    return _Enumeration(tuple(sorted(level)), peak)


def isotropic_subspaces(
    p: int,
    epsilon: int,
    dim: int,
    k: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> tuple[tuple[Vector, ...], ...]:
    """All k-dimensional totally isotropic subspaces of F_{q^2}^dim for the identity form.

    Each subspace is given by its RREF rows; the list is sorted lexicographically.
    The search builds the subspaces one dimension at a time and ``budget`` caps
    every intermediate level, so an oversized request fails early instead of
    after the full enumeration.  Only finished enumerations are cached.

    Raises:
        BudgetExceededError: when some level holds more than ``budget`` subspaces.
    """
    if k == 0:
        return ((),)
    if k < 0 or 2 * k > dim:
        return ()
    key = (p, epsilon % p, dim, k)
    found = _cache.get(key)
    if found is None:
        found = _enumerate(residue_field(p, epsilon), dim, k, budget)
        if len(_cache) >= _CACHE_SIZE:
            _cache.pop(next(iter(_cache)))
        _cache[key] = found
        logger.debug(
            "isotropic subspaces enumerated",
            p=p,
            dim=dim,
            k=k,
            count=len(found.subspaces),
            peak=found.peak,
            **_tags.get_log_kwargs(LogType.ENUMERATION),
        )
    if found.peak > budget:
        raise _over_budget(found.peak, budget, "subspaces")
    return found.subspaces


def count_isotropic_subspaces(
    p: int, epsilon: int, dim: int, k: int, budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> int:
    return len(isotropic_subspaces(p, epsilon, dim, k, budget))
