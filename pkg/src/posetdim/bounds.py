"""Dimension bounds for m-partite posets in terms of their bipartite layers.

``B(P)`` is the largest dimension among the sub-posets on two parts X_i + X_j.
Two constructions turn per-pair realizers into a realizer of the whole poset:
one extends every pair order separately (sum of the pair dimensions), the
other chains pairs with disjoint index ranges into a single order so that
only floor((m-1)(m+3)/4) * B orders are needed.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import NotABipartiteRealizer, TooSmall
from .multipartite import MultipartitePoset
from .poset import concat, extend_linear_order
from .solver import Realizer, exact_dimension, greedy_dimension_upper_bound, is_realizer

DEFAULT_SOLVER_CAP = 24


def solver_cap() -> int:
    """Largest sub-poset solved exactly; ``POSETDIM_SOLVER_CAP`` overrides."""
    return int(os.environ.get("POSETDIM_SOLVER_CAP", DEFAULT_SOLVER_CAP))


# ----------------------------------------------------------- formulas

def _check_m(m: int):
    if m < 2:
        raise TooSmall(f"need m >= 2, got {m}")


def theorem_bound_formula(m: int) -> int:
    _check_m(m)
    return (m - 1) * (m + 3) // 4


def pair_count_bound(m: int) -> int:
    """m choose 2: coefficient of the plain sum bound when every d_ij = B."""
    _check_m(m)
    return m * (m - 1) // 2


def proof_display_sum(m: int) -> int:
    """(2 + 3 + ... + K) + (1 + 2 + ... + (m - K)) with K = floor((m+1)/2)."""
    _check_m(m)
    K = (m + 1) // 2
    return int(np.arange(2, K + 1, dtype=np.int64).sum() + np.arange(1, m - K + 1, dtype=np.int64).sum())


@dataclass(frozen=True)
class FmEnvelope:
    """Known range for the worst ratio dim(P) / B(P) over m-partite posets."""

    m: int
    lower: int
    upper: int

    def to_json(self) -> dict:
        return {"m": self.m, "lower": self.lower, "upper": self.upper}


def fm_envelope(m: int) -> FmEnvelope:
    _check_m(m)
    return FmEnvelope(m, m * m // 4, theorem_bound_formula(m))


def remark_family(m: int) -> list[tuple[int, int]]:
    """2-sets {i, j} of [m] with i <= ceil(m/2) <= j."""
    _check_m(m)
    c = (m + 1) // 2
    return [(i, j) for i in range(1, c + 1) for j in range(c, m + 1) if i < j]


def interval_less(s, t) -> bool:
    """{i1, j1} < {i2, j2} in the interval order on 2-sets iff j1 < i2."""
    return s[1] < t[0]


def remark_incomparable_count(m: int) -> int:
    """Size of the middle antichain of 2-sets in the interval order on [m] choose 2.

    Raises RuntimeError if the family is not an antichain or its size differs
    from ``theorem_bound_formula(m)``.
    """
    _check_m(m)
    count, antichain = _kernels.interval_family(m)
    if not antichain:
        raise RuntimeError(f"middle 2-set family of [{m}] has comparable members")
    if count != theorem_bound_formula(m):
        raise RuntimeError(f"middle family of [{m}] has {count} members, expected {theorem_bound_formula(m)}")
    return count


# ------------------------------------------------------- pair dimensions

@dataclass
class PairDimension:
    dimension: int
    realizer: Realizer
    exact: bool


def pair_dimensions(mp: MultipartitePoset, mode: str = "exact", cap: int | None = None,
                    threads: int = 1) -> dict:
    """Dimension and a realizer for every bipartite sub-poset P_ij, keyed by (i, j)."""
    if mode not in ("exact", "greedy"):
        raise ValueError("mode must be 'exact' or 'greedy'")
    cap = solver_cap() if cap is None else cap

    def solve(ij):
        sub = mp.bipartite_subposet(*ij)
        if mode == "exact" and len(sub) <= cap:
            res = exact_dimension(sub)
            return ij, PairDimension(res.dimension, res.witness, True)
        r = greedy_dimension_upper_bound(sub)
        return ij, PairDimension(len(r), r, False)

    pairs = mp.part_pairs()
    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            return dict(ex.map(solve, pairs))
    return dict(map(solve, pairs))


def B_of(mp: MultipartitePoset, mode: str = "exact", cap: int | None = None, threads: int = 1):
    """Returns (B, {(i, j): d_ij}, is_exact)."""
    table = pair_dimensions(mp, mode, cap, threads)
    dims = {ij: pd.dimension for ij, pd in table.items()}
    return max(dims.values()), dims, all(pd.exact for pd in table.values())


# ------------------------------------------------------- constructions

def _check_pair_realizers(mp: MultipartitePoset, realizers: dict) -> dict:
    out = {}
    for ij in mp.part_pairs():
        r = realizers.get(ij)
        if isinstance(r, PairDimension):
            r = r.realizer
        sub = mp.bipartite_subposet(*ij)
        try:
            ok = r is not None and is_realizer(sub.poset, r)
        except Exception:
            ok = False
        if not ok:
            raise NotABipartiteRealizer(f"orders given for parts {ij} do not realize P_{ij}")
        out[ij] = r
    return out


def sum_bound_realizer(mp: MultipartitePoset, realizers: dict) -> Realizer:
    """Extend every order of every pair realizer to the whole poset."""
    realizers = _check_pair_realizers(mp, realizers)
    p = mp.poset
    orders = [extend_linear_order(p, o) for ij in mp.part_pairs() for o in realizers[ij].orders]
    return Realizer(tuple(orders))


def gap_class_plan(m: int) -> list[list[tuple[int, int]]]:
    """Groups of part pairs that share B linear orders.

    Pairs (i, j) are classed by k = j - i + 1.  For k <= floor((m+1)/2) the
    class splits into k chains by i mod k; consecutive pairs of a chain have
    disjoint index ranges.  Longer pairs each form their own group.
    """
    _check_m(m)
    K = (m + 1) // 2
    plan = []
    for k in range(2, m + 1):
        pairs = [(i, i + k - 1) for i in range(1, m - k + 2)]
        if k <= K:
            for res in range(k):
                chain = [ij for ij in pairs if (ij[0] - 1) % k == res]
                if chain:
                    plan.append(chain)
        else:
            plan.extend([ij] for ij in pairs)
    return plan


def theorem_bound_realizer(mp: MultipartitePoset, realizers: dict) -> Realizer:
    """Realizer with at most floor((m-1)(m+3)/4) * B orders.

    Every pair realizer is padded to B orders by repeating its last order.
    For each group of ``gap_class_plan`` and each t < B, the t-th orders of
    the group's pairs are concatenated bottom to top and extended to the
    whole poset.
    """
    realizers = _check_pair_realizers(mp, realizers)
    B = max(len(r) for r in realizers.values())
    padded = {ij: list(r.orders) + [r.orders[-1]] * (B - len(r)) for ij, r in realizers.items()}
    p = mp.poset
    orders = []
    for group in gap_class_plan(mp.m):
        for t in range(B):
            orders.append(extend_linear_order(p, concat([padded[ij][t] for ij in group])))
    return Realizer(tuple(orders))


# ------------------------------------------------------------- report

@dataclass
class BoundReport:
    m: int
    B: int
    B_exact: bool
    pair_dims: dict
    sum_bound: int
    theorem_bound: int
    witness: Realizer
    sum_witness: Realizer
    exact_dim: int | None = None
    envelope: FmEnvelope = field(default=None)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "B": self.B,
            "is_exact": self.B_exact,
            "pair_dims": [{"i": i, "j": j, "d": d} for (i, j), d in sorted(self.pair_dims.items())],
            "sum_bound": self.sum_bound,
            "theorem_bound": self.theorem_bound,
            "theorem_coefficient": theorem_bound_formula(self.m),
            "witness_size": len(self.witness),
            "sum_witness_size": len(self.sum_witness),
            "exact_dim": self.exact_dim,
            "fm_envelope": self.envelope.to_json() if self.envelope else None,
            "witness": self.witness.to_json()["orders"],
        }


def bound_report(mp: MultipartitePoset, mode: str = "exact", cap: int | None = None,
                 exact_cap: int | None = None, threads: int = 1) -> BoundReport:
    """B(P), both realizer constructions, and dim(P) when the whole poset is small enough."""
    cap = solver_cap() if cap is None else cap
    exact_cap = cap if exact_cap is None else exact_cap
    table = pair_dimensions(mp, mode, cap, threads)
    realizers = {ij: pd.realizer for ij, pd in table.items()}
    dims = {ij: pd.dimension for ij, pd in table.items()}
    B = max(dims.values())
    exact_dim = None
    if mode == "exact" and len(mp) <= exact_cap:
        exact_dim = exact_dimension(mp.poset).dimension
    return BoundReport(
        m=mp.m,
        B=B,
        B_exact=all(pd.exact for pd in table.values()),
        pair_dims=dims,
        sum_bound=sum(dims.values()),
        theorem_bound=theorem_bound_formula(mp.m) * B,
        witness=theorem_bound_realizer(mp, realizers),
        sum_witness=sum_bound_realizer(mp, realizers),
        exact_dim=exact_dim,
        envelope=fm_envelope(mp.m),
    )
