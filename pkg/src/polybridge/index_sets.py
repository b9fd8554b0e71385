"""Conditioning sets J and differentiating sets I.

J is a subset of {1..n} naming the integrals X_j pinned to zero at time 1.
I is an n-element subset of {0..2n-1} naming the derivative orders that
vanish at 1 in the boundary value problem.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Union


class BadIndexSet(ValueError):
    """An index set violates its range or cardinality constraints."""


class NotABridge(ValueError):
    """The differentiating set does not come from any conditioning set."""


@dataclass(frozen=True)
class IndexSetJ:
    n: int
    elems: tuple[int, ...]

    def __init__(self, n: int, elems: Iterable[int] = ()):
        if n < 1:
            raise BadIndexSet(f"order must be positive, got {n}")
        es = tuple(sorted(set(int(e) for e in elems)))
        if any(not 1 <= e <= n for e in es):
            raise BadIndexSet(f"J must be a subset of {{1..{n}}}, got {set(es) or '{}'}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "elems", es)

    def __iter__(self):
        return iter(self.elems)

    def __len__(self):
        return len(self.elems)

    def __contains__(self, x):
        return x in self.elems

    def __str__(self):
        return format_set(self.elems)


@dataclass(frozen=True)
class IndexSetI:
    n: int
    elems: tuple[int, ...]

    def __init__(self, n: int, elems: Iterable[int]):
        if n < 1:
            raise BadIndexSet(f"order must be positive, got {n}")
        raw = [int(e) for e in elems]
        es = tuple(sorted(set(raw)))
        if len(es) != len(raw):
            raise BadIndexSet(f"duplicate entries in I: {raw}")
        if len(es) != n:
            raise BadIndexSet(f"I must have exactly n = {n} elements, got {len(es)}")
        if any(not 0 <= e <= 2 * n - 1 for e in es):
            raise BadIndexSet(f"I must be a subset of {{0..{2 * n - 1}}}, got {format_set(es)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "elems", es)

    def __iter__(self):
        return iter(self.elems)

    def __len__(self):
        return len(self.elems)

    def __contains__(self, x):
        return x in self.elems

    def __str__(self):
        return format_set(self.elems)


JLike = Union[IndexSetJ, Iterable[int]]
ILike = Union[IndexSetI, Iterable[int]]


def as_jset(n: int, J: JLike) -> IndexSetJ:
    if isinstance(J, IndexSetJ):
        if J.n != n:
            raise BadIndexSet(f"J was built for n = {J.n}, not {n}")
        return J
    return IndexSetJ(n, J)


def as_iset(n: int, I: ILike) -> IndexSetI:
    if isinstance(I, IndexSetI):
        if I.n != n:
            raise BadIndexSet(f"I was built for n = {I.n}, not {n}")
        return I
    return IndexSetI(n, I)


def format_set(elems: Iterable[int]) -> str:
    return "{" + ",".join(str(e) for e in elems) + "}"


def j_to_i(J: IndexSetJ) -> IndexSetI:
    n = J.n
    low = {n - j for j in J}
    high = set(range(n, 2 * n)) - {j + n - 1 for j in J}
    return IndexSetI(n, low | high)


def is_admissible(I: IndexSetI) -> bool:
    """Exactly one of i, 2n-1-i lies in I for every i < n."""
    n = I.n
    return all((i in I) != (2 * n - 1 - i in I) for i in range(n))


def is_admissible_by_complement(I: IndexSetI) -> bool:
    """Same predicate, stated as 2n-1-I == complement of I."""
    n = I.n
    return {2 * n - 1 - i for i in I} == set(range(2 * n)) - set(I)


def i_to_j(I: IndexSetI) -> IndexSetJ:
    if not is_admissible(I):
        raise NotABridge(f"I = {I} does not correspond to a bridge (dual set {dual_set(I)})")
    n = I.n
    return IndexSetJ(n, {n - i for i in I} & set(range(1, n + 1)))


def dual_set(I: IndexSetI) -> IndexSetI:
    n = I.n
    return IndexSetI(n, set(range(2 * n)) - {2 * n - 1 - i for i in I})


def all_isets(n: int) -> list[IndexSetI]:
    """Every n-subset of {0..2n-1}, lexicographic."""
    return [IndexSetI(n, c) for c in combinations(range(2 * n), n)]


def all_jsets(n: int) -> list[IndexSetJ]:
    return [IndexSetJ(n, c) for m in range(n + 1) for c in combinations(range(1, n + 1), m)]


Filter = Literal["all", "admissible", "non_admissible_pairs"]


def enumerate_sets(n: int, filter: Filter = "all") -> list:
    """List index sets of order n.

    ``all`` and ``admissible`` give lists of :class:`IndexSetI`;
    ``non_admissible_pairs`` gives (I1, dual(I1)) tuples with I1 the
    lexicographically smaller member of each pair.
    """
    if n < 1:
        raise BadIndexSet(f"order must be positive, got {n}")
    sets = all_isets(n)
    if filter == "all":
        return sets
    if filter == "admissible":
        return [I for I in sets if is_admissible(I)]
    if filter == "non_admissible_pairs":
        pairs = []
        for I in sets:
            if is_admissible(I):
                continue
            D = dual_set(I)
            if I.elems < D.elems:
                pairs.append((I, D))
        return pairs
    raise ValueError(f"unknown filter {filter!r}")
