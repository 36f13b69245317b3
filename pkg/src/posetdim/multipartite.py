"""m-partite posets: an ordered partition into antichains, relations only go up."""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    BackwardRelation,
    EmptyPart,
    IndexOutOfRange,
    IntraPartRelation,
    NotStrictlyOrdered,
    PartsOverlap,
    SingleLevel,
    TooFewParts,
    UnknownId,
)
from .poset import Poset


class MultipartitePoset:
    """A poset together with an ordered partition ``X_1, ..., X_m``.

    Parts are indexed from 1, as in ``bipartite_subposet(mp, 1, 2)``.
    """

    def __init__(self, parts: Sequence[Iterable[str]], poset: Poset, check: bool = True):
        self.parts = tuple(tuple(sorted(part)) for part in parts)
        self.poset = poset
        self.part_of = {x: i for i, part in enumerate(self.parts, 1) for x in part}
        if check:
            self._validate()

    def _validate(self):
        if len(self.parts) < 2:
            raise TooFewParts(f"need at least 2 parts, got {len(self.parts)}")
        seen = set()
        for i, part in enumerate(self.parts, 1):
            if not part:
                raise EmptyPart(f"part {i} is empty")
            if seen & set(part):
                raise PartsOverlap(f"part {i} shares {sorted(seen & set(part))}")
            seen |= set(part)
        if seen != set(self.poset.elements):
            extra = sorted(set(self.poset.elements) - seen) or sorted(seen - set(self.poset.elements))
            raise UnknownId(f"parts do not cover the ground set exactly: {extra}")
        for x, y in self.poset.relations():
            px, py = self.part_of[x], self.part_of[y]
            if px == py:
                raise IntraPartRelation(f"{x!r} < {y!r} inside part {px}")
            if px > py:
                raise BackwardRelation(f"{x!r} in part {px} lies below {y!r} in part {py}")

    @property
    def m(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.poset)

    def __eq__(self, other):
        if not isinstance(other, MultipartitePoset):
            return NotImplemented
        return self.parts == other.parts and self.poset == other.poset

    def __repr__(self):
        sizes = ",".join(str(len(p)) for p in self.parts)
        return f"{type(self).__name__}(m={self.m}, parts=[{sizes}], {self.poset!r})"

    def underlying(self) -> Poset:
        return self.poset

    def part_pairs(self):
        return [(i, j) for i in range(1, self.m + 1) for j in range(i + 1, self.m + 1)]

    def bipartite_subposet(self, i: int, j: int) -> "BipartitePoset":
        if not (1 <= i <= self.m and 1 <= j <= self.m):
            raise IndexOutOfRange(f"parts are numbered 1..{self.m}, got ({i}, {j})")
        if i >= j:
            raise NotStrictlyOrdered(f"need i < j, got ({i}, {j})")
        lower, upper = self.parts[i - 1], self.parts[j - 1]
        sub = self.poset.induced_subposet(lower + upper)
        return BipartitePoset(lower, upper, sub, check=False)


class BipartitePoset(MultipartitePoset):
    """Two-part special case ``(X, Y; <=)``; every relation goes from X to Y."""

    def __init__(self, lower, upper, poset: Poset, check: bool = True):
        super().__init__([lower, upper], poset, check=check)

    @property
    def lower(self):
        return self.parts[0]

    @property
    def upper(self):
        return self.parts[1]


def new_multipartite(parts: Sequence[Iterable[str]], relations: Iterable[Sequence[str]] = ()) -> MultipartitePoset:
    parts = [list(p) for p in parts]
    flat = [x for p in parts for x in p]
    if len(set(flat)) != len(flat):
        # report overlap before the poset constructor calls it a duplicate id
        seen = set()
        for i, p in enumerate(parts, 1):
            if seen & set(p):
                raise PartsOverlap(f"part {i} shares {sorted(seen & set(p))}")
            seen |= set(p)
    relations = [tuple(r) for r in relations]
    part_of = {x: i for i, p in enumerate(parts) for x in p}
    # check the raw pairs first so the error names the offending input
    for x, y in relations:
        if x == y or x not in part_of or y not in part_of:
            continue
        if part_of[x] == part_of[y]:
            raise IntraPartRelation(f"{x!r} < {y!r} inside part {part_of[x] + 1}")
        if part_of[x] > part_of[y]:
            raise BackwardRelation(f"{x!r} in part {part_of[x] + 1} lies below {y!r} in part {part_of[y] + 1}")
    return MultipartitePoset(parts, Poset.from_relations(flat, relations))


def derive_levels(p: Poset) -> MultipartitePoset:
    """Partition ``p`` by height: part i holds elements whose longest chain down has length i-1."""
    h = p.heights()
    levels = max(h.values(), default=0) + 1
    if levels < 2:
        raise SingleLevel("poset is an antichain; it has a single height level")
    parts = [[] for _ in range(levels)]
    for x, lvl in h.items():
        parts[lvl].append(x)
    return MultipartitePoset(parts, p)


def relation_owner(mp: MultipartitePoset) -> dict:
    """Map each strict relation to the (i, j) part pair that contains it."""
    return {(x, y): (mp.part_of[x], mp.part_of[y]) for x, y in mp.poset.relations()}
