"""Finite posets stored as closed boolean relation matrices, and linear orders."""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import (
    CycleDetected,
    DomainMismatch,
    DuplicateId,
    InconsistentPartial,
    OverlappingDomains,
    UnknownId,
)


class Poset:
    """An immutable finite poset.

    Elements are string ids kept in lexicographic order, so index order is the
    canonical order used for every tie-break.  ``leq[i, j]`` is true iff
    ``elements[i] <= elements[j]``; the matrix is reflexive and closed.
    """

    __slots__ = ("elements", "index", "leq")

    def __init__(self, elements: Sequence[str], leq: np.ndarray):
        # trusted constructor: callers guarantee sorted ids and a closed matrix
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        leq = np.asarray(leq, dtype=np.bool_)
        leq.setflags(write=False)
        self.leq = leq

    @classmethod
    def from_relations(cls, elements: Iterable[str], relations: Iterable[Sequence[str]] = ()):
        elements = [str(e) for e in elements]
        seen = set()
        for e in elements:
            if e in seen:
                raise DuplicateId(f"duplicate element id {e!r}")
            seen.add(e)
        ordered = sorted(elements)
        index = {e: i for i, e in enumerate(ordered)}
        n = len(ordered)
        m = np.zeros((n, n), dtype=np.bool_)
        for pair in relations:
            x, y = pair
            if x not in index:
                raise UnknownId(f"relation references unknown id {x!r}")
            if y not in index:
                raise UnknownId(f"relation references unknown id {y!r}")
            m[index[x], index[y]] = True
        m = _kernels.closure(m) if n else m
        both = m & m.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = np.argwhere(both)[0]
            raise CycleDetected(
                f"relations force {ordered[i]!r} <= {ordered[j]!r} and back")
        return cls(ordered, m)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash((self.elements, self.leq.tobytes()))

    def __repr__(self):
        return f"Poset({len(self)} elements, {len(self.relations())} strict relations)"

    def _idx(self, x):
        try:
            return self.index[x]
        except KeyError:
            raise UnknownId(f"unknown element id {x!r}") from None

    def le(self, x: str, y: str) -> bool:
        return bool(self.leq[self._idx(x), self._idx(y)])

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.le(x, y)

    def comparable(self, x: str, y: str) -> bool:
        return self.le(x, y) or self.le(y, x)

    @property
    def strict(self) -> np.ndarray:
        return self.leq & ~np.eye(len(self), dtype=np.bool_)

    def relations(self) -> list[tuple[str, str]]:
        """All strict pairs ``(x, y)`` with ``x < y``, in canonical order."""
        e = self.elements
        return [(e[i], e[j]) for i, j in np.argwhere(self.strict)]

    def cover_relations(self) -> list[tuple[str, str]]:
        s = self.strict
        # x < y is a cover iff no z with x < z < y
        through = (s.astype(np.int64) @ s.astype(np.int64)) > 0
        e = self.elements
        return [(e[i], e[j]) for i, j in np.argwhere(s & ~through)]

    def incomparable_pairs(self) -> set[frozenset]:
        inc = ~(self.leq | self.leq.T)
        e = self.elements
        return {frozenset((e[i], e[j])) for i, j in np.argwhere(np.triu(inc, 1))}

    def min_elements(self) -> set[str]:
        has_below = self.strict.any(axis=0)
        return {e for e, b in zip(self.elements, has_below) if not b}

    def max_elements(self) -> set[str]:
        has_above = self.strict.any(axis=1)
        return {e for e, b in zip(self.elements, has_above) if not b}

    def is_chain(self) -> bool:
        return bool((self.leq | self.leq.T).all())

    def induced_subposet(self, subset: Iterable[str]) -> "Poset":
        subset = set(subset)
        for x in subset:
            self._idx(x)
        keep = [i for i, e in enumerate(self.elements) if e in subset]
        return Poset([self.elements[i] for i in keep], self.leq[np.ix_(keep, keep)])

    def heights(self) -> dict[str, int]:
        """Length of the longest chain ending at each element (minimal -> 0)."""
        h = {}
        for i in _kernels.toposort(np.ascontiguousarray(self.leq)):
            below = np.flatnonzero(self.strict[:, i])
            h[self.elements[i]] = 1 + max((h[self.elements[j]] for j in below), default=-1)
        return h


def new_poset(elements: Iterable[str], relations: Iterable[Sequence[str]] = ()) -> Poset:
    """Build a poset from ids and a generating set of ``(x, y)`` meaning x <= y.

    Self-pairs are ignored; the reflexive-transitive closure is taken.
    """
    return Poset.from_relations(elements, relations)


def is_isomorphic(p: Poset, q: Poset) -> bool:
    import networkx as nx

    if len(p) != len(q) or len(p.relations()) != len(q.relations()):
        return False
    gp = nx.DiGraph()
    gp.add_nodes_from(p.elements)
    gp.add_edges_from(p.cover_relations())
    gq = nx.DiGraph()
    gq.add_nodes_from(q.elements)
    gq.add_edges_from(q.cover_relations())
    return nx.is_isomorphic(gp, gq)


# ------------------------------------------------------------ linear orders

@dataclass(frozen=True)
class LinearOrder:
    """A total order listed bottom to top."""

    sequence: tuple

    def __post_init__(self):
        seq = tuple(self.sequence)
        if len(set(seq)) != len(seq):
            raise DuplicateId("linear order repeats an element")
        object.__setattr__(self, "sequence", seq)

    @property
    def domain(self) -> frozenset:
        return frozenset(self.sequence)

    def __len__(self):
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    def positions(self) -> dict:
        return {x: i for i, x in enumerate(self.sequence)}

    def below(self, x, y) -> bool:
        pos = self.positions()
        return pos[x] < pos[y]


def reverse(order: LinearOrder) -> LinearOrder:
    return LinearOrder(order.sequence[::-1])


def delete(order: LinearOrder, x) -> LinearOrder:
    if x not in order.domain:
        raise UnknownId(f"{x!r} is not in the order")
    return LinearOrder(tuple(e for e in order.sequence if e != x))


def concat(orders: Sequence[LinearOrder]) -> LinearOrder:
    """Juxtapose orders with disjoint domains, first one lowest."""
    seen = set()
    for o in orders:
        if seen & o.domain:
            raise OverlappingDomains(f"domains share {sorted(seen & o.domain)}")
        seen |= o.domain
    return LinearOrder(tuple(x for o in orders for x in o.sequence))


def is_linear_extension(p: Poset, order: LinearOrder) -> bool:
    if order.domain != set(p.elements):
        raise DomainMismatch("order does not span the poset")
    pos = np.empty(len(p), dtype=np.int64)
    for r, x in enumerate(order.sequence):
        pos[p.index[x]] = r
    i, j = np.nonzero(p.strict)
    return bool((pos[i] < pos[j]).all())


def extend_linear_order(p: Poset, partial: LinearOrder) -> LinearOrder:
    """Extend a linear extension of an induced sub-poset to one of ``p``.

    Topologically sorts ``p`` together with the chain given by ``partial``,
    taking the lexicographically smallest available id at every step.  The
    result restricted to the domain of ``partial`` is ``partial`` itself.
    """
    seq = partial.sequence
    idx = [p._idx(x) for x in seq]
    for a, b in combinations(range(len(idx)), 2):
        if p.leq[idx[b], idx[a]]:
            raise InconsistentPartial(
                f"{seq[b]!r} <= {seq[a]!r} in the poset but the partial order has it above")
    n = len(p)
    succ = [set(np.flatnonzero(p.strict[i]).tolist()) for i in range(n)]
    for a, b in zip(idx, idx[1:]):
        succ[a].add(b)
    indeg = [0] * n
    for i in range(n):
        for j in succ[i]:
            indeg[j] += 1
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        i = heapq.heappop(heap)
        out.append(p.elements[i])
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, j)
    # cannot fail once the consistency check above passed
    assert len(out) == n
    return LinearOrder(tuple(out))


def restrict(order: LinearOrder, subset: Iterable) -> LinearOrder:
    subset = set(subset)
    return LinearOrder(tuple(x for x in order.sequence if x in subset))
