"""Generators for the named poset families, random instances, and the explicit
realizer of a complete bipartite poset with a matching removed.

Generated ids are zero-padded so lexicographic order agrees with index order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import BadMatching, BadParameters, NotARealizer, TooSmall
from .multipartite import BipartitePoset, MultipartitePoset, new_multipartite
from .poset import LinearOrder, Poset, concat, delete, reverse
from .solver import Realizer, is_realizer


def _pad(n: int) -> int:
    return len(str(n))


def standard_example(n: int) -> BipartitePoset:
    """S_n: a_i < b_j iff i != j."""
    if n < 2:
        raise TooSmall("standard example needs n >= 2")
    w = _pad(n)
    a = [f"a_{i:0{w}d}" for i in range(1, n + 1)]
    b = [f"b_{j:0{w}d}" for j in range(1, n + 1)]
    rel = [(a[i], b[j]) for i in range(n) for j in range(n) if i != j]
    return BipartitePoset(a, b, Poset.from_relations(a + b, rel))


def stacked_standard(n: int) -> MultipartitePoset:
    """S_n with a middle element c_i_j inserted into every relation a_i < b_j.

    Parts are [A, C, B].  Both layers A+C and C+B have dimension 2 while A+B
    is S_n.
    """
    if n < 2:
        raise TooSmall("stacked standard example needs n >= 2")
    w = _pad(n)
    a = [f"a_{i:0{w}d}" for i in range(1, n + 1)]
    b = [f"b_{j:0{w}d}" for j in range(1, n + 1)]
    c, rel = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                cij = f"c_{i + 1:0{w}d}_{j + 1:0{w}d}"
                c.append(cij)
                rel += [(a[i], cij), (cij, b[j])]
    return new_multipartite([a, c, b], rel)


# --------------------------------------------------------------- matchings

@dataclass(frozen=True)
class Matching:
    """Pairs (row, column), 1-based, rows index x's and columns index y's."""

    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted((int(i), int(j)) for i, j in self.pairs)))

    def __len__(self):
        return len(self.pairs)

    def check(self, h: int, k: int):
        rows = [i for i, _ in self.pairs]
        cols = [j for _, j in self.pairs]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise BadMatching(f"{self.pairs} repeats a row or a column")
        for i, j in self.pairs:
            if not (1 <= i <= h and 1 <= j <= k):
                raise BadMatching(f"pair ({i}, {j}) is outside [{h}] x [{k}]")
        if len(self) > min(h, k):
            raise BadMatching("matching larger than min(h, k)")


def diagonal(g: int) -> Matching:
    return Matching(tuple((i, i) for i in range(1, g + 1)))


def random_matching(h: int, k: int, rng, g: int | None = None) -> Matching:
    """Uniform random matching; its size is drawn from 1..min(h, k) unless given."""
    rng = np.random.default_rng(rng)
    if g is None:
        g = int(rng.integers(1, min(h, k) + 1))
    rows = rng.choice(np.arange(1, h + 1), size=g, replace=False)
    cols = rng.choice(np.arange(1, k + 1), size=g, replace=False)
    return Matching(tuple(zip(rows.tolist(), cols.tolist())))


def _xy_names(h: int, k: int):
    w = _pad(max(h, k))
    return ([f"x_{i:0{w}d}" for i in range(1, h + 1)],
            [f"y_{j:0{w}d}" for j in range(1, k + 1)])


def complete_minus_matching(h: int, k: int, matching: Matching | Iterable) -> BipartitePoset:
    """x_i < y_j for every (i, j) in [h] x [k] outside the matching."""
    if h < 2 or k < 2:
        raise TooSmall("need h, k >= 2")
    if not isinstance(matching, Matching):
        matching = Matching(tuple(matching))
    matching.check(h, k)
    xs, ys = _xy_names(h, k)
    missing = set(matching.pairs)
    rel = [(xs[i - 1], ys[j - 1])
           for i in range(1, h + 1) for j in range(1, k + 1) if (i, j) not in missing]
    return BipartitePoset(xs, ys, Poset.from_relations(xs + ys, rel))


def _lx_indices(h: int) -> list[int]:
    # 1, 3, 4, ..., h, 2
    return [1] + list(range(3, h + 1)) + [2]


def lemma4_realizer(h: int, k: int, matching: Matching | Iterable) -> Realizer:
    """Explicit realizer of size max(2, g) for ``complete_minus_matching(h, k, M)``.

    Rows and columns are first renumbered so the matching becomes
    (1,1), ..., (g,g); the orders are built on the renumbered copy and mapped
    back to the original ids.  The result is checked before it is returned.
    """
    if h < 2 or k < 2:
        raise TooSmall("need h, k >= 2")
    if not isinstance(matching, Matching):
        matching = Matching(tuple(matching))
    matching.check(h, k)
    g = len(matching)
    if g < 1:
        raise BadMatching("the explicit realizer needs a matching of size >= 1")

    xs, ys = _xy_names(h, k)
    rows = [i for i, _ in matching.pairs]
    cols = [j for _, j in matching.pairs]
    row_perm = rows + [i for i in range(1, h + 1) if i not in rows]
    col_perm = cols + [j for j in range(1, k + 1) if j not in cols]
    # renumbered index l -> original id
    X = {l: xs[row_perm[l - 1] - 1] for l in range(1, h + 1)}
    Y = {l: ys[col_perm[l - 1] - 1] for l in range(1, k + 1)}
    Lx = LinearOrder(tuple(X[i] for i in _lx_indices(h)))
    Ly = LinearOrder(tuple(Y[j] for j in _lx_indices(k)))

    def pin(l):
        return LinearOrder((Y[l], X[l]))

    orders = [concat([reverse(delete(Lx, X[1])), pin(1), delete(Ly, Y[1])])]
    if g == 1:
        orders.append(concat([LinearOrder((X[1],)), delete(Lx, X[1]),
                              reverse(delete(Ly, Y[1])), LinearOrder((Y[1],))]))
    for l in range(2, g + 1):
        orders.append(concat([delete(Lx, X[l]), pin(l), reverse(delete(Ly, Y[l]))]))

    realizer = Realizer(tuple(orders))
    if not is_realizer(complete_minus_matching(h, k, matching).poset, realizer):
        raise NotARealizer(f"explicit orders fail for h={h}, k={k}, M={matching.pairs}")
    return realizer


def lower_bound_family(d: int, h: int, k: int, allow_d1: bool = False) -> MultipartitePoset:
    """Standard example on 2*d*d*h*k elements cut into h + k parts.

    x_{i,j} < y_{i',j'} iff (i, j) != (i', j') over [dh] x [dk].  Part X_p is
    the p-th block of d rows of the x's, part Y_q the q-th block of d columns
    of the y's.  Every X_p + Y_q sub-poset is a complete bipartite poset minus a
    matching of size d*d, while the whole has dimension d*d*h*k.
    """
    if h < 2 or k < 2 or d < (1 if allow_d1 else 2):
        raise TooSmall("need d, h, k >= 2")
    R, C = d * h, d * k
    w = _pad(max(R, C))

    def name(t, i, j):
        return f"{t}_{i:0{w}d}_{j:0{w}d}"

    cells = [(i, j) for i in range(1, R + 1) for j in range(1, C + 1)]
    A = [name("x", i, j) for i, j in cells]
    B = [name("y", i, j) for i, j in cells]
    n = len(cells)
    leq = np.eye(2 * n, dtype=np.bool_)
    # ids sort as all x's then all y's, both in cell order
    leq[:n, n:] = ~np.eye(n, dtype=np.bool_)
    poset = Poset(A + B, leq)
    parts = [[name("x", i, j) for i in range((p - 1) * d + 1, p * d + 1) for j in range(1, C + 1)]
             for p in range(1, h + 1)]
    parts += [[name("y", i, j) for i in range(1, R + 1) for j in range((q - 1) * d + 1, q * d + 1)]
              for q in range(1, k + 1)]
    return MultipartitePoset(parts, poset)


def subset_poset(k1: int, k2: int, n: int) -> BipartitePoset:
    """k1-subsets and k2-subsets of [n] ordered by inclusion."""
    if not (0 <= k1 < k2 <= n):
        raise BadParameters(f"need 0 <= k1 < k2 <= n, got ({k1}, {k2}, {n})")
    w = _pad(n)

    def name(s):
        return "s_" + "_".join(f"{i:0{w}d}" for i in s)

    lo = list(combinations(range(1, n + 1), k1))
    hi = list(combinations(range(1, n + 1), k2))
    rel = [(name(s), name(t)) for s in lo for t in hi if set(s) <= set(t)]
    lower = [name(s) for s in lo]
    upper = [name(t) for t in hi]
    return BipartitePoset(lower, upper, Poset.from_relations(lower + upper, rel))


# ------------------------------------------------------------------ random

def random_poset(n: int, density: float, seed=0) -> Poset:
    """Closure of a random DAG: each pair of a random ordering is related with prob ``density``."""
    rng = np.random.default_rng(seed)
    w = _pad(max(n - 1, 1))
    ids = [f"e{i:0{w}d}" for i in range(n)]
    perm = rng.permutation(n)
    rel = [(ids[perm[i]], ids[perm[j]])
           for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return Poset.from_relations(ids, rel)


def random_multipartite(part_sizes, density: float, seed=0) -> MultipartitePoset:
    """Random m-partite poset: each cross-part pair x in X_i, y in X_j, i < j, related with prob ``density``."""
    rng = np.random.default_rng(seed)
    wp, we = _pad(len(part_sizes)), _pad(max(part_sizes))
    parts = [[f"p{i:0{wp}d}_{j:0{we}d}" for j in range(1, s + 1)]
             for i, s in enumerate(part_sizes, 1)]
    rel = [(x, y)
           for i in range(len(parts)) for j in range(i + 1, len(parts))
           for x in parts[i] for y in parts[j] if rng.random() < density]
    return new_multipartite(parts, rel)
