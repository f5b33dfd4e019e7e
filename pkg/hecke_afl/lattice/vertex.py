"""Lattices in the split hermitian space W_0 = F^n and their canonical forms.

A lattice L is tracked through its scaled copy p^r L, which must lie between
p^{2r} O^n and O^n (r = the window radius).  Scaled lattices are stored by a
column Hermite normal form over O_F / p^{2r+1}: upper triangular, pivots exactly
p^e, entries above a pivot p^e reduced to [0, p^e) componentwise.  Two lattices
are equal exactly when their canonical columns are.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from random import Random

from ..constants import DEFAULT_ENUMERATION_BUDGET, DEFAULT_WINDOW_RADIUS
from ..exceptions import InvalidInputError, WindowError
from ..localfield import FieldElement, PrimeConfig, rational_valuation, reduce_rational
from .residue import ResidueField, Vector, isotropic_subspaces, residue_field

Pair = tuple[int, int]
Column = tuple[Pair, ...]
ZERO: Pair = (0, 0)


@dataclass(frozen=True, slots=True)
class HermSpace:
    """F^n with the antidiagonal hermitian form h(x, y) = sum conj(x_i) y_{n+1-i}.

    Attributes:
        n: Dimension.
        config: Prime and non-square defining F.
        radius: Window radius r; lattices must satisfy p^r Xi_0 in L in p^-r Xi_0.
    """

    n: int
    config: PrimeConfig = field(default_factory=PrimeConfig)
    radius: int = DEFAULT_WINDOW_RADIUS

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidInputError(f"dimension must be positive, got {self.n}")
        if self.radius < 1:
            raise InvalidInputError(f"window radius must be positive, got {self.radius}")

    @property
    def p(self) -> int:
        return self.config.p

    @property
    def epsilon(self) -> int:
        return self.config.epsilon

    @property
    def window(self) -> int:
        return 2 * self.radius + 1

    @property
    def modulus(self) -> int:
        return self.p**self.window

    @property
    def scale(self) -> int:
        return self.p**self.radius

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        n = self.n
        return tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n))

    @property
    def residue(self) -> ResidueField:
        return residue_field(self.p, self.epsilon)

    def pairing(self, x: Sequence[Pair], y: Sequence[Pair]) -> Pair:
        """Exact h(x, y) for integer-pair vectors."""
        eps, n = self.epsilon, self.n
        s0 = s1 = 0
        for k in range(n):
            a, b = x[k]
            c, d = y[n - 1 - k]
            # (a - b delta)(c + d delta)
            s0 += a * c - eps * b * d
            s1 += a * d - b * c
        return s0, s1


def _ival(c: int, p: int, cap: int) -> int:
    if c == 0:
        return cap
    k = 0
    while c % p == 0:
        c //= p
        k += 1
    return min(k, cap)


def _pair_val(x: Pair, p: int, cap: int) -> int:
    return min(_ival(x[0], p, cap), _ival(x[1], p, cap))


def _mul(x: Pair, y: Pair, eps: int, modulus: int) -> Pair:
    return (
        (x[0] * y[0] + eps * x[1] * y[1]) % modulus,
        (x[0] * y[1] + x[1] * y[0]) % modulus,
    )


def _unit_inverse(u: Pair, eps: int, modulus: int) -> Pair:
    norm_inv = pow((u[0] * u[0] - eps * u[1] * u[1]) % modulus, -1, modulus)
    return u[0] * norm_inv % modulus, -u[1] * norm_inv % modulus


def _scale_vec(c: Pair, v: Sequence[Pair], eps: int, modulus: int) -> Column:
    return tuple(_mul(c, x, eps, modulus) for x in v)


def _axpy(c: Pair, x: Sequence[Pair], y: Sequence[Pair], eps: int, modulus: int) -> Column:
    """y - c*x."""
    out = []
    for xi, yi in zip(x, y):
        m0, m1 = _mul(c, xi, eps, modulus)
        out.append(((yi[0] - m0) % modulus, (yi[1] - m1) % modulus))
    return tuple(out)


def _is_zero(v: Sequence[Pair]) -> bool:
    return all(a == 0 and b == 0 for a, b in v)


def hermite_form(space: HermSpace, generators: Sequence[Sequence[Pair]]) -> tuple[tuple[Column, ...], tuple[int, ...]]:
    """Canonical columns and pivot exponents of the O_F-span of ``generators`` mod p^K.

    Raises:
        WindowError: when the span does not have full rank modulo p^K.
    """
    p, eps, K, P, n = space.p, space.epsilon, space.window, space.modulus, space.n
    work = [tuple((a % P, b % P) for a, b in g) for g in generators]
    work = [g for g in work if not _is_zero(g)]
    columns: list[Column] = [()] * n
    exponents = [0] * n
    for row in range(n - 1, -1, -1):
        best, best_val = -1, K
        for idx, g in enumerate(work):
            v = _pair_val(g[row], p, K)
            if v < best_val:
                best, best_val = idx, v
        if best < 0:
            raise WindowError(f"lattice has no pivot in row {row} below p^{K}")
        pivot = work.pop(best)
        pv = p**best_val
        unit = (pivot[row][0] // pv, pivot[row][1] // pv)
        pivot = _scale_vec(_unit_inverse(unit, eps, P), pivot, eps, P)
        remaining = []
        for g in work:
            x = g[row]
            if x != ZERO:
                g = _axpy((x[0] // pv, x[1] // pv), pivot, g, eps, P)
            if not _is_zero(g):
                remaining.append(g)
        # p^{K-e} * pivot is zero in this row but may survive above it
        extra = _scale_vec((p ** (K - best_val) % P, 0), pivot, eps, P)
        if not _is_zero(extra):
            remaining.append(extra)
        work = remaining
        columns[row] = pivot
        exponents[row] = best_val
    for j in range(n):
        col = columns[j]
        for i in range(j - 1, -1, -1):
            m = p ** exponents[i]
            a, b = col[i]
            c = (a // m, b // m)
            if c != ZERO:
                col = _axpy(c, columns[i], col, eps, P)
        columns[j] = col
    return tuple(columns), tuple(exponents)


def _contains_vector(space: HermSpace, columns: Sequence[Column], exponents: Sequence[int], vector: Sequence[Pair]) -> bool:
    p, eps, P, n = space.p, space.epsilon, space.modulus, space.n
    x = tuple((a % P, b % P) for a, b in vector)
    for row in range(n - 1, -1, -1):
        entry = x[row]
        if entry == ZERO:
            continue
        m = p ** exponents[row]
        if entry[0] % m or entry[1] % m:
            return False
        x = _axpy((entry[0] // m, entry[1] // m), columns[row], x, eps, P)
    return _is_zero(x)


def _dual_columns(space: HermSpace, columns: Sequence[Column], exponents: Sequence[int]) -> list[Column]:
    """Generators of the scaled dual: J * p^{2r} (B^*)^{-1}, by forward substitution."""
    p, eps, P, n = space.p, space.epsilon, space.modulus, space.n
    top = p ** (2 * space.radius)
    solution: list[list[Pair]] = [[ZERO] * n for _ in range(n)]
    for c in range(n):
        for i in range(n):
            acc0 = top if i == c else 0
            acc1 = 0
            for l in range(i):
                xa, xb = solution[l][c]
                if not (xa or xb):
                    continue
                ba, bb = columns[i][l]
                acc0 -= ba * xa - eps * bb * xb
                acc1 -= ba * xb - bb * xa
            m = p ** exponents[i]
            if acc0 % m or acc1 % m:
                raise WindowError("dual lattice leaves the tracked window")
            solution[i][c] = (acc0 // m, acc1 // m)
    return [
        tuple((solution[n - 1 - i][c][0] % P, solution[n - 1 - i][c][1] % P) for i in range(n))
        for c in range(n)
    ]


def _check_window(space: HermSpace, columns: Sequence[Column], exponents: Sequence[int]) -> None:
    floor = space.p ** (2 * space.radius)
    for i in range(space.n):
        unit = tuple((floor, 0) if k == i else ZERO for k in range(space.n))
        if not _contains_vector(space, columns, exponents, unit):
            raise WindowError(f"lattice does not contain p^{space.radius} e_{i + 1}")


@dataclass(frozen=True, eq=False)
class VertexLattice:
    """A lattice L with L in L^dual in p^-1 L, in canonical form.

    ``columns[j][i]`` is row i of column j of the scaled Hermite form.
    """

    space: HermSpace
    columns: tuple[Column, ...]
    exponents: tuple[int, ...]
    type_t: int

    @classmethod
    def from_generators(
        cls,
        space: HermSpace,
        generators: Sequence[Sequence[Pair]],
        verify: bool = True,
        type_t: int | None = None,
    ) -> VertexLattice:
        """Canonicalize the span of scaled generators.

        Args:
            space: Ambient space.
            generators: Vectors of ``(a, b)`` pairs for a + b*delta, scaled by p^r.
            verify: Check the vertex condition and recompute the type.
            type_t: Type known from the construction; required when ``verify`` is False.

        Raises:
            WindowError: when the lattice leaves the tracked window.
            InvalidInputError: when the lattice is not a vertex lattice.
        """
        columns, exponents = hermite_form(space, generators)
        _check_window(space, columns, exponents)
        if not verify:
            if type_t is None:
                raise InvalidInputError("type_t is required when verification is skipped")
            return cls(space, columns, exponents, type_t)
        lattice = cls(space, columns, exponents, -1)
        dual = lattice.dual_unchecked()
        if not all(dual.contains_vector(col) for col in columns):
            raise InvalidInputError("lattice is not contained in its dual")
        p = space.p
        if not all(lattice.contains_vector([(p * a, p * b) for a, b in col]) for col in dual.columns):
            raise InvalidInputError("p times the dual is not contained in the lattice")
        computed = sum(exponents) - sum(dual.exponents)
        if type_t is not None and type_t != computed:
            raise InvalidInputError(f"declared type {type_t} but the lattice has type {computed}")
        return cls(space, columns, exponents, computed)

    @classmethod
    def from_field_basis(cls, space: HermSpace, basis: Sequence[Sequence[FieldElement]]) -> VertexLattice:
        """Lattice spanned by the columns of an n x n matrix over F (``basis[i][j]`` = row i, column j)."""
        n, P, p = space.n, space.modulus, space.p
        gens = []
        for j in range(n):
            col = []
            for i in range(n):
                entry = basis[i][j] * space.scale
                for part in (entry.x, entry.y):
                    if rational_valuation(part, p) < 0:
                        raise WindowError("basis entry outside the tracked window")
                col.append((reduce_rational(entry.x, P), reduce_rational(entry.y, P)))
            gens.append(col)
        return cls.from_generators(space, gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexLattice):
            return NotImplemented
        return self.space == other.space and self.columns == other.columns

    def __hash__(self) -> int:
        return hash(self.columns)

    @property
    def key(self) -> bytes:
        return repr(self.columns).encode()

    def contains_vector(self, vector: Sequence[Pair]) -> bool:
        return _contains_vector(self.space, self.columns, self.exponents, vector)

    def contains(self, other: VertexLattice) -> bool:
        return all(self.contains_vector(col) for col in other.columns)

    def dual_unchecked(self) -> VertexLattice:
        space = self.space
        columns, exponents = hermite_form(space, _dual_columns(space, self.columns, self.exponents))
        _check_window(space, columns, exponents)
        return VertexLattice(space, columns, exponents, self.type_t)

    @cached_property
    def dual(self) -> VertexLattice:
        return self.dual_unchecked()

    @property
    def basis(self) -> list[list[FieldElement]]:
        """Canonical basis matrix over F with exact rational entries."""
        scale, config = self.space.scale, self.space.config
        n = self.space.n
        return [
            [
                FieldElement(Fraction(self.columns[j][i][0], scale), Fraction(self.columns[j][i][1], scale), config)
                for j in range(n)
            ]
            for i in range(n)
        ]

    def canonical_rows(self) -> list[list[str]]:
        return [[str(entry) for entry in row] for row in self.basis]

    def as_dict(self) -> dict[str, object]:
        return {"type": self.type_t, "basis": self.canonical_rows()}


def standard_selfdual(space: HermSpace) -> VertexLattice:
    """Xi_0 = O_F^n."""
    return standard_chain(space, 0)


def standard_chain(space: HermSpace, t: int) -> VertexLattice:
    """Xi_t = p(O e_1 + ... + O e_{t/2}) + O e_{t/2+1} + ... + O e_n, of type t."""
    if t % 2 or not 0 <= t <= space.n:
        raise InvalidInputError(f"t must be even with 0 <= t <= {space.n}, got {t}")
    s, n, P = space.scale, space.n, space.modulus
    gens = []
    for j in range(n):
        factor = s * space.p if j < t // 2 else s
        gens.append(tuple((factor % P, 0) if i == j else ZERO for i in range(n)))
    return VertexLattice.from_generators(space, gens, type_t=t)


def dual(lattice: VertexLattice) -> VertexLattice:
    return lattice.dual


def type_of(lattice: VertexLattice) -> int:
    """Length of L^dual / L from the pivot exponents."""
    return sum(lattice.exponents) - sum(lattice.dual.exponents)


def intersection(left: VertexLattice, right: VertexLattice) -> VertexLattice:
    """(L^dual + L'^dual)^dual.

    Raises:
        InvalidInputError: when the intersection is not a vertex lattice.
    """
    space = left.space
    dual_sum = VertexLattice.from_generators(
        space, list(left.dual.columns) + list(right.dual.columns), verify=False, type_t=-1,
    )
    meet = dual_sum.dual_unchecked()
    return VertexLattice.from_generators(space, meet.columns)


def _residue_gram(space: HermSpace, columns: Sequence[Column], divisor: int) -> list[list[int]]:
    field_ = space.residue
    gram = []
    for ci in columns:
        row = []
        for cj in columns:
            s0, s1 = space.pairing(ci, cj)
            if s0 % divisor or s1 % divisor:
                raise InvalidInputError("hermitian form is not integral on the lattice")
            row.append(field_.code(s0 // divisor, s1 // divisor))
        gram.append(row)
    return gram


def _combine(space: HermSpace, columns: Sequence[Column], coords: Vector) -> Column:
    """sum_j lift(coords_j) * columns_j."""
    field_, eps, P, n = space.residue, space.epsilon, space.modulus, space.n
    out = [ZERO] * n
    for c, col in zip(coords, columns):
        if not c:
            continue
        lift = field_.components(c)
        for i in range(n):
            m0, m1 = _mul(lift, col[i], eps, P)
            out[i] = ((out[i][0] + m0) % P, (out[i][1] + m1) % P)
    return tuple(out)


def _transport(field_: ResidueField, frame: Sequence[Vector], coords: Vector) -> Vector:
    n = len(frame[0])
    out: Vector = (0,) * n
    for c, f in zip(coords, frame):
        if c:
            out = field_.axpy(c, f, out)
    return out


@dataclass(frozen=True)
class _ResidueModel:
    """Hermitian residue space with an orthonormal frame of its nondegenerate part."""

    columns: tuple[Column, ...]
    frame: tuple[Vector, ...]
    radical: tuple[Vector, ...]


def _residue_model(space: HermSpace, columns: Sequence[Column], divisor: int) -> _ResidueModel:
    frame, radical = space.residue.hermitian_frame(_residue_gram(space, columns, divisor))
    return _ResidueModel(tuple(columns), tuple(frame), tuple(radical))


def _subspaces(space: HermSpace, dim: int, k: int, budget: int) -> tuple[tuple[Vector, ...], ...]:
    if k < 0 or 2 * k > dim:
        return ()
    return isotropic_subspaces(space.p, space.epsilon, dim, k, budget)


def _sublattice(space: HermSpace, lattice: VertexLattice, model: _ResidueModel, isotropic: tuple[Vector, ...], target: int) -> VertexLattice:
    field_, p = space.residue, space.p
    dim = len(model.frame)
    perp = field_.nullspace([tuple(field_.conj[c] for c in row) for row in isotropic], dim)
    coisotropic = [_transport(field_, model.frame, v) for v in perp] + list(model.radical)
    gens = [_combine(space, model.columns, u) for u in coisotropic]
    gens += [tuple((p * a, p * b) for a, b in col) for col in lattice.columns]
    return VertexLattice.from_generators(space, gens, verify=False, type_t=target)


def _sublattice_setup(lattice: VertexLattice, target: int) -> tuple[_ResidueModel, int]:
    space = lattice.space
    if target % 2 or not lattice.type_t <= target <= space.n:
        raise InvalidInputError(
            f"target type must be even with {lattice.type_t} <= t <= {space.n}, got {target}",
        )
    model = _residue_model(space, lattice.columns, space.p ** (2 * space.radius))
    return model, (target - lattice.type_t) // 2


def vertex_sublattices(lattice: VertexLattice, target: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Iterator[VertexLattice]:
    """Every vertex lattice M in L of type ``target``, in residue-subspace order.

    M / pL^dual runs over the coisotropic subspaces I^perp of L / pL^dual, I
    isotropic of dimension (target - type(L)) / 2.
    """
    model, k = _sublattice_setup(lattice, target)
    for isotropic in _subspaces(lattice.space, len(model.frame), k, budget):
        yield _sublattice(lattice.space, lattice, model, isotropic, target)


def random_sublattice(lattice: VertexLattice, target: int, rng: Random) -> VertexLattice:
    model, k = _sublattice_setup(lattice, target)
    choices = _subspaces(lattice.space, len(model.frame), k, DEFAULT_ENUMERATION_BUDGET)
    return _sublattice(lattice.space, lattice, model, choices[rng.randrange(len(choices))], target)


def _superlattice_setup(lattice: VertexLattice, target: int) -> tuple[_ResidueModel, int]:
    space = lattice.space
    if target % 2 or not 0 <= target <= lattice.type_t:
        raise InvalidInputError(
            f"target type must be even with 0 <= t <= {lattice.type_t}, got {target}",
        )
    model = _residue_model(space, lattice.dual.columns, space.p ** (2 * space.radius - 1))
    return model, (lattice.type_t - target) // 2


def _superlattice(space: HermSpace, lattice: VertexLattice, model: _ResidueModel, isotropic: tuple[Vector, ...], target: int) -> VertexLattice:
    gens = list(lattice.columns)
    gens += [_combine(space, model.columns, _transport(space.residue, model.frame, v)) for v in isotropic]
    return VertexLattice.from_generators(space, gens, verify=False, type_t=target)


def vertex_superlattices(lattice: VertexLattice, target: int = 0, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Iterator[VertexLattice]:
    """Every vertex lattice L' of type ``target`` with M in L' in M^dual.

    L' / M runs over the isotropic subspaces of dimension (type(M) - target) / 2
    of the nondegenerate space M^dual / M.
    """
    model, k = _superlattice_setup(lattice, target)
    for isotropic in _subspaces(lattice.space, len(model.frame), k, budget):
        yield _superlattice(lattice.space, lattice, model, isotropic, target)


def random_superlattice(lattice: VertexLattice, target: int, rng: Random) -> VertexLattice:
    model, k = _superlattice_setup(lattice, target)
    choices = _subspaces(lattice.space, len(model.frame), k, DEFAULT_ENUMERATION_BUDGET)
    return _superlattice(lattice.space, lattice, model, choices[rng.randrange(len(choices))], target)


def enum_vertex_in(lattice: VertexLattice, t: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> list[VertexLattice]:
    """All type-t vertex lattices inside a self-dual lattice."""
    if lattice.type_t != 0:
        raise InvalidInputError("enum_vertex_in expects a self-dual lattice")
    return list(vertex_sublattices(lattice, t, budget))


def enum_selfdual_over(lattice: VertexLattice, budget: int = DEFAULT_ENUMERATION_BUDGET) -> list[VertexLattice]:
    """All self-dual lattices containing a vertex lattice."""
    return list(vertex_superlattices(lattice, 0, budget))


def random_selfdual(space: HermSpace, rng: Random, steps: int = 1) -> VertexLattice:
    """A self-dual lattice reached from Xi_0 by ``steps`` random type-2 moves."""
    lattice = standard_selfdual(space)
    if space.n < 2:
        return lattice
    for _ in range(steps):
        lattice = random_superlattice(random_sublattice(lattice, 2, rng), 0, rng)
    return lattice


def random_vertex(space: HermSpace, t: int, rng: Random, steps: int = 1) -> VertexLattice:
    """A random type-t vertex lattice inside a random self-dual lattice."""
    return random_sublattice(random_selfdual(space, rng, steps), t, rng)
