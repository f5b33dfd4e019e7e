"""Hecke correspondences on self-dual lattices and the counts derived from them."""
from __future__ import annotations

import hashlib
import threading
from collections import Counter
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from random import Random

import structlog
from sympy import isprime

from ..constants import DEFAULT_ENUMERATION_BUDGET, DEFAULT_SEED, worker_count
from ..exceptions import BudgetExceededError, InvalidInputError, VerificationError, WindowError
from ..localfield import PrimeConfig
from ..logging_utils import LogTagging, LogType
from .vertex import (
    HermSpace,
    VertexLattice,
    intersection,
    random_vertex,
    standard_selfdual,
    vertex_sublattices,
    vertex_superlattices,
)

logger = structlog.get_logger(__name__)
_tags = LogTagging({"component": "lattice"})

# below this many inputs a support step runs in-process
_PARALLEL_THRESHOLD = 64


@dataclass(frozen=True)
class CorrespondencePair:
    """(left, right) with an optional middle lattice contained in both."""

    left: VertexLattice
    right: VertexLattice
    witness: VertexLattice | None = None

    def __post_init__(self) -> None:
        if self.witness is not None and not (
            self.left.contains(self.witness) and self.right.contains(self.witness)
        ):
            raise InvalidInputError("witness is not contained in both lattices")


@dataclass(frozen=True)
class WitnessClass:
    """Lattices L' in the support of T_{<=t}(L) with type(L cap L') = t_prime."""

    t_prime: int
    support_size: int
    multiplicity: int

    def as_dict(self) -> dict[str, int]:
        return {
            "t_prime": self.t_prime,
            "support_size": self.support_size,
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class CommutativityReport:
    t: int
    t2: int
    left_set_size: int
    right_set_size: int
    equal: bool

    def as_dict(self) -> dict[str, object]:
        return {
            "t": self.t,
            "t2": self.t2,
            "left_set_size": self.left_set_size,
            "right_set_size": self.right_set_size,
            "equal": self.equal,
        }


def _require_selfdual(lattice: VertexLattice) -> None:
    if lattice.type_t != 0:
        raise InvalidInputError(f"expected a self-dual lattice, got type {lattice.type_t}")


def T_leq(lattice: VertexLattice, t: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> list[CorrespondencePair]:
    """All triples (L, M, L') with M of type t and M in L cap L', L' self-dual.

    The number of triples over a given L' is the value of the atomic function
    phi_t at (L, L').
    """
    _require_selfdual(lattice)
    pairs: list[CorrespondencePair] = []
    for middle in vertex_sublattices(lattice, t, budget):
        for right in vertex_superlattices(middle, 0, budget):
            pairs.append(CorrespondencePair(lattice, right, middle))
            if len(pairs) > budget:
                raise BudgetExceededError(f"T_leq exceeded the budget of {budget} triples")
    return pairs


def _intersection_types(lattice: VertexLattice, rights: Iterable[VertexLattice]) -> dict[VertexLattice, int]:
    return {right: intersection(lattice, right).type_t for right in rights}


def T_exact_support(lattice: VertexLattice, t: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> set[VertexLattice]:
    """{L' self-dual : type(L cap L') = t}, the support of f^[t] at L."""
    rights = {pair.right for pair in T_leq(lattice, t, budget)}
    types = _intersection_types(lattice, rights)
    return {right for right, kind in types.items() if kind == t}


def witness_partition(lattice: VertexLattice, t: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> dict[int, WitnessClass]:
    """Split the support of T_{<=t}(L) by the type of L cap L'.

    Raises:
        VerificationError: when the witness count is not constant on a class.
    """
    multiplicities = Counter(pair.right for pair in T_leq(lattice, t, budget))
    types = _intersection_types(lattice, multiplicities)
    grouped: dict[int, set[int]] = {}
    sizes: Counter[int] = Counter()
    for right, count in multiplicities.items():
        grouped.setdefault(types[right], set()).add(count)
        sizes[types[right]] += 1
    partition = {}
    for t_prime in sorted(grouped):
        counts = grouped[t_prime]
        if len(counts) != 1:
            raise VerificationError(
                f"witness counts {sorted(counts)} vary on the class type(L cap L') = {t_prime}",
            )
        partition[t_prime] = WitnessClass(t_prime, sizes[t_prime], counts.pop())
    return partition


_M_COUNT_MEMO: dict[tuple[int, int, int, int], int] = {}
_M_COUNT_LOCK = threading.Lock()


def m_count(
    n: int,
    t_prime: int,
    t: int,
    q: int,
    samples: int = 3,
    seed: int = DEFAULT_SEED,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> int:
    """Number of type-t vertex lattices inside a fixed type-t' vertex lattice.

    The count is taken at ``samples`` random base lattices and must agree.

    Raises:
        InvalidInputError: unless t' <= t are even, t <= n and q is an odd prime.
        VerificationError: when the count depends on the base lattice.
    """
    if t_prime % 2 or t % 2 or not 0 <= t_prime <= t <= n:
        raise InvalidInputError(f"need even 0 <= t' <= t <= n, got t'={t_prime}, t={t}, n={n}")
    if not isprime(q) or q == 2:
        raise InvalidInputError(f"q must be an odd prime, got {q}")
    key = (n, t_prime, t, q)
    with _M_COUNT_LOCK:
        if key in _M_COUNT_MEMO:
            return _M_COUNT_MEMO[key]
    space = HermSpace(n, PrimeConfig(p=q))
    rng = Random(seed)
    counts = set()
    for _ in range(max(1, samples)):
        base = random_vertex(space, t_prime, rng)
        counts.add(sum(1 for _ in vertex_sublattices(base, t, budget)))
    if len(counts) != 1:
        raise VerificationError(f"m({t_prime},{t}) depends on the base lattice: {sorted(counts)}")
    value = counts.pop()
    with _M_COUNT_LOCK:
        _M_COUNT_MEMO.setdefault(key, value)
    logger.debug(
        "m_count computed",
        n=n,
        t_prime=t_prime,
        t=t,
        q=q,
        value=value,
        **_tags.get_log_kwargs(LogType.ENUMERATION),
    )
    return value


def relative_position(left: VertexLattice, right: VertexLattice) -> tuple[int, int]:
    """Elementary divisors (m, -m) of a self-dual L' relative to a self-dual L, n = 2."""
    if left.space.n != 2:
        raise InvalidInputError("relative position is implemented for n = 2")
    _require_selfdual(left)
    _require_selfdual(right)
    space = left.space
    for m in range(space.window):
        factor = space.p**m
        if all(left.contains_vector([(factor * a, factor * b) for a, b in col]) for col in right.columns):
            return m, -m
    raise WindowError("relative position exceeds the tracked window")


def distance_count(lattice: VertexLattice, m: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> int:
    """Number of self-dual L' at relative position (m, -m) from L, n = 2."""
    _require_selfdual(lattice)
    if lattice.space.n != 2:
        raise InvalidInputError("distance counts are implemented for n = 2")
    if m < 0:
        raise InvalidInputError(f"m must be non-negative, got {m}")
    seen = {lattice}
    frontier = {lattice}
    for _ in range(m):
        reached: set[VertexLattice] = set()
        for current in frontier:
            reached |= T_exact_support(current, 2, budget)
        frontier = reached - seen
        seen |= reached
        if len(seen) > budget:
            raise BudgetExceededError(f"neighbourhood exceeded the budget of {budget}")
    return sum(1 for other in seen if relative_position(lattice, other)[0] == m)


def _digest(lattice: VertexLattice) -> bytes:
    return hashlib.sha256(lattice.key).digest()


def _sublattice_chunk(args: tuple[Sequence[VertexLattice], int, int]) -> set[VertexLattice]:
    lattices, t, budget = args
    out: set[VertexLattice] = set()
    for lattice in lattices:
        out.update(vertex_sublattices(lattice, t, budget))
    return out


def _selfdual_chunk(args: tuple[Sequence[VertexLattice], int, bool]) -> set:
    middles, budget, digest = args
    out: set = set()
    for middle in middles:
        for right in vertex_superlattices(middle, 0, budget):
            out.add(_digest(right) if digest else right)
    return out


def _chunks(items: list, parts: int) -> list[list]:
    size = max(1, -(-len(items) // parts))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _fan_out(fn, items: list, extra: tuple, workers: int) -> set:
    if workers <= 1 or len(items) < _PARALLEL_THRESHOLD:
        return fn((items, *extra))
    out: set = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(fn, [(chunk, *extra) for chunk in _chunks(items, workers * 4)]):
            out |= part
    return out


def _support_step(lattices: Iterable[VertexLattice], t: int, budget: int, workers: int, digest: bool) -> set:
    """Support of T_{<=t} applied to a set of self-dual lattices."""
    middles = _fan_out(_sublattice_chunk, sorted(lattices, key=lambda lat: lat.key), (t, budget), workers)
    if len(middles) > budget:
        raise BudgetExceededError(f"{len(middles)} middle lattices exceed the budget of {budget}")
    out = _fan_out(_selfdual_chunk, sorted(middles, key=lambda lat: lat.key), (budget, digest), workers)
    if len(out) > budget:
        raise BudgetExceededError(f"{len(out)} lattices exceed the budget of {budget}")
    return out


def commutativity_check(
    lattice: VertexLattice,
    t: int,
    t2: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    workers: int | None = None,
) -> CommutativityReport:
    """Compare the supports of T_{<=t}(T_{<=t2}(L)) and T_{<=t2}(T_{<=t}(L)) as sets."""
    _require_selfdual(lattice)
    workers = worker_count() if workers is None else max(1, workers)
    logger.info(
        "commutativity check started",
        n=lattice.space.n,
        t=t,
        t2=t2,
        workers=workers,
        **_tags.get_log_kwargs(LogType.ENUMERATION),
    )
    left = _support_step(_support_step({lattice}, t2, budget, workers, False), t, budget, workers, True)
    right = _support_step(_support_step({lattice}, t, budget, workers, False), t2, budget, workers, True)
    report = CommutativityReport(t, t2, len(left), len(right), left == right)
    logger.info(
        "commutativity check finished",
        **report.as_dict(),
        **_tags.get_log_kwargs(LogType.ENUMERATION),
    )
    return report


def counts_table(n: int, q: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> list[dict[str, int]]:
    """Rows (n, t', t, q, m_count, support_size) for every even t' <= t <= n.

    ``support_size`` counts the L' in the support of T_{<=t}(Xi_0) with
    type(Xi_0 cap L') = t'.
    """
    base = standard_selfdual(HermSpace(n, PrimeConfig(p=q)))
    rows = []
    for t in range(0, n + 1, 2):
        partition = witness_partition(base, t, budget)
        for t_prime in range(0, t + 1, 2):
            value = m_count(n, t_prime, t, q, budget=budget)
            witness = partition.get(t_prime)
            if witness is not None and witness.multiplicity != value:
                raise VerificationError(
                    f"witness multiplicity {witness.multiplicity} differs from m({t_prime},{t}) = {value}",
                )
            rows.append({
                "n": n,
                "t_prime": t_prime,
                "t": t,
                "q": q,
                "m_count": value,
                "support_size": witness.support_size if witness is not None else 0,
            })
    return rows
