"""Hot inner loops of the solver.

Every kernel exists twice: a loop version compiled with ``numba.njit`` and a
vectorised pure-numpy version.  The numpy path is used when numba is missing
or when the environment variable ``POSETDIM_DISABLE_NUMBA`` is set to a
non-empty value other than ``0``.  Both paths return identical results; the
test-suite checks this and ``benchmarks/bench_kernels.py`` times them.

Relation matrices are square ``bool`` arrays with ``up[a, b]`` true iff
``a <= b``.  They are always kept reflexive and transitively closed.
"""
import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

_flag = os.environ.get("POSETDIM_DISABLE_NUMBA", "")
USE_NUMBA = HAVE_NUMBA and _flag in ("", "0")


def _njit(func):
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func


# ---------------------------------------------------------------- closure

def _closure_loop(m):
    n = m.shape[0]
    for k in range(n):
        for i in range(n):
            if m[i, k]:
                for j in range(n):
                    if m[k, j]:
                        m[i, j] = True
    return m


def closure_numpy(m):
    """Reflexive-transitive closure (Warshall), returns a new array."""
    m = np.array(m, dtype=np.bool_, copy=True)
    np.fill_diagonal(m, True)
    for k in range(m.shape[0]):
        m |= np.outer(m[:, k], m[k, :])
    return m


_closure_nb = _njit(_closure_loop)


def closure_numba(m):
    m = np.array(m, dtype=np.bool_, copy=True)
    np.fill_diagonal(m, True)
    return _closure_nb(m)


# ---------------------------------------------------------- add relation

def _add_relation_loop(up, x, y):
    # everything below x goes below everything above y
    n = up.shape[0]
    for a in range(n):
        if up[a, x]:
            for b in range(n):
                if up[y, b]:
                    up[a, b] = True


def add_relation_numpy(up, x, y):
    """Force ``x <= y`` into the closed matrix ``up`` in place."""
    rows = up[:, x]
    up[rows] |= up[y]


add_relation_numba = _njit(_add_relation_loop)


# ------------------------------------------------------ pair selection

def _select_loop(ups, used, xs, ys):
    # Returns (index, options) of the uncovered requirement with fewest
    # feasible open classes, first in canonical order on ties.
    # index == -1 means every requirement is already covered.
    best = -1
    best_opts = 1 << 30
    for r in range(xs.shape[0]):
        x = xs[r]
        y = ys[r]
        covered = False
        opts = 0
        for c in range(used):
            if ups[c, x, y]:
                covered = True
                break
            if not ups[c, y, x]:
                opts += 1
        if covered:
            continue
        if opts < best_opts:
            best = r
            best_opts = opts
            if opts == 0:
                break
    if best == -1:
        best_opts = 0
    return best, best_opts


def select_numpy(ups, used, xs, ys):
    """Pick the most constrained uncovered requirement ``x below y``."""
    if used == 0:
        return (0, 0) if len(xs) else (-1, 0)
    active = ups[:used]
    covered = active[:, xs, ys].any(axis=0)
    opts = (~active[:, ys, xs]).sum(axis=0)
    idx = np.flatnonzero(~covered)
    if idx.size == 0:
        return -1, 0
    j = int(np.argmin(opts[idx]))
    return int(idx[j]), int(opts[idx[j]])


_select_nb = _njit(_select_loop)


def select_numba(ups, used, xs, ys):
    best, opts = _select_nb(ups, used, xs, ys)
    return int(best), int(opts)


# --------------------------------------------- closure -> linear order

def _toposort_loop(up):
    # Kahn's algorithm, smallest index first among available elements.
    n = up.shape[0]
    indeg = np.zeros(n, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            if a != b and up[a, b]:
                indeg[b] += 1
    placed = np.zeros(n, dtype=np.bool_)
    out = np.empty(n, dtype=np.int64)
    for t in range(n):
        pick = -1
        for b in range(n):
            if not placed[b] and indeg[b] == 0:
                pick = b
                break
        if pick == -1:
            return out[:t]
        placed[pick] = True
        out[t] = pick
        for b in range(n):
            if b != pick and up[pick, b]:
                indeg[b] -= 1
    return out


def toposort_numpy(up):
    """Lexicographically smallest linear extension of a closed relation.

    Returns fewer than ``n`` indices when the relation has a cycle.
    """
    n = up.shape[0]
    strict = up & ~np.eye(n, dtype=np.bool_)
    indeg = strict.sum(axis=0)
    placed = np.zeros(n, dtype=np.bool_)
    out = []
    for _ in range(n):
        ready = np.flatnonzero((indeg == 0) & ~placed)
        if ready.size == 0:
            break
        pick = ready[0]
        placed[pick] = True
        out.append(pick)
        indeg = indeg - strict[pick]
    return np.asarray(out, dtype=np.int64)


toposort_numba = _njit(_toposort_loop)


# ------------------------------------------------ interval 2-set family

def _interval_family_loop(m):
    # Members {i, j}, i < j, i <= c <= j with c = ceil(m/2).  Two members are
    # comparable in the interval order iff one's j is below the other's i, so
    # the family is an antichain iff min(j) >= max(i).
    c = (m + 1) // 2
    count = 0
    max_i = 0
    min_j = m + 1
    for i in range(1, c + 1):
        for j in range(c, m + 1):
            if i < j:
                count += 1
                if i > max_i:
                    max_i = i
                if j < min_j:
                    min_j = j
    return count, min_j >= max_i


def interval_family_numpy(m):
    """Size of the middle 2-set family of [m] and whether it is an antichain."""
    c = (m + 1) // 2
    i, j = np.meshgrid(np.arange(1, c + 1), np.arange(c, m + 1), indexing="ij")
    keep = i < j
    if not keep.any():
        return 0, True
    return int(keep.sum()), bool(j[keep].min() >= i[keep].max())


_interval_family_nb = _njit(_interval_family_loop)


def interval_family_numba(m):
    count, ok = _interval_family_nb(m)
    return int(count), bool(ok)


# ------------------------------------------------------------- dispatch

if USE_NUMBA:
    closure = closure_numba
    add_relation = add_relation_numba
    select = select_numba
    toposort = toposort_numba
    interval_family = interval_family_numba
else:
    closure = closure_numpy
    add_relation = add_relation_numpy
    select = select_numpy
    toposort = toposort_numpy
    interval_family = interval_family_numpy

BACKEND = "numba" if USE_NUMBA else "numpy"
