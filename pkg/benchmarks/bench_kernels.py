"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings call both implementations directly in one process.  The
end-to-end solves run in subprocesses, one per backend, because the backend
is fixed at import time by ``POSETDIM_DISABLE_NUMBA``.
"""
import argparse
import json
import os
import subprocess
import sys
import timeit

import numpy as np

from posetdim import _kernels as K
from posetdim.constructions import random_poset, stacked_standard
from posetdim.solver import requirements

SOLVES = {
    "S_6": "standard_example(6)",
    "stacked n=4": "stacked_standard(4)",
    "C_-4(8,8)": "complete_minus_matching(8, 8, diagonal(4))",
    "lower-bound d=h=k=2": "lower_bound_family(2, 2, 2)",
    "random n=14": "random_poset(14, 0.3, 7)",
}

_CHILD = """
import json, sys, time
from posetdim import *
from posetdim.constructions import diagonal
from posetdim import _kernels
out = {"backend": _kernels.BACKEND}
exact_dimension(standard_example(3))  # warm up the jit cache
for name, expr in json.loads(sys.argv[1]).items():
    p = eval(expr)
    t = time.perf_counter()
    res = exact_dimension(p)
    out[name] = (res.dimension, time.perf_counter() - t)
print(json.dumps(out))
"""


def _best(fn, repeat):
    fn()
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def _added(f, leq, x, y):
    up = leq.copy()
    f(up, x, y)
    return up


def kernel_cases():
    rng = np.random.default_rng(0)
    upper = np.triu(rng.random((120, 120)) < 0.05, 1) | np.eye(120, dtype=bool)
    closed = K.closure_numpy(upper.copy())
    p = stacked_standard(5).poset
    xs, ys = requirements(p)
    d = 5
    ups = np.broadcast_to(p.leq, (d,) + p.leq.shape).copy()
    q = random_poset(40, 0.2, 3)
    ix, iy = requirements(q)
    return {
        "closure n=120": (lambda f: f(upper.copy()), K.closure_numba, K.closure_numpy),
        "add_relation n=40": (lambda f: _added(f, q.leq, int(ix[0]), int(iy[0])),
                              K.add_relation_numba, K.add_relation_numpy),
        "select d=5 stacked5": (lambda f: f(ups, d, xs, ys), K.select_numba, K.select_numpy),
        "toposort n=120": (lambda f: f(closed), K.toposort_numba, K.toposort_numpy),
        "interval_family m=1000": (lambda f: f(1000), K.interval_family_numba, K.interval_family_numpy),
    }


def run_solves(disable):
    env = dict(os.environ, POSETDIM_DISABLE_NUMBA="1" if disable else "0")
    proc = subprocess.run([sys.executable, "-c", _CHILD, json.dumps(SOLVES)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not K.HAVE_NUMBA:
        sys.exit("numba is not installed; nothing to compare")

    print(f"{'kernel':<26}{'numba (ms)':>12}{'numpy (ms)':>12}{'ratio':>8}")
    for name, (call, fast, slow) in kernel_cases().items():
        a = _best(lambda: call(fast), args.repeat) * 1e3
        b = _best(lambda: call(slow), args.repeat) * 1e3
        print(f"{name:<26}{a:>12.3f}{b:>12.3f}{b / a:>8.1f}")

    nb, npy = run_solves(False), run_solves(True)
    print()
    print(f"{'exact solve':<26}{'dim':>5}{'numba (s)':>12}{'numpy (s)':>12}")
    for name in SOLVES:
        (d1, t1), (d2, t2) = nb[name], npy[name]
        assert d1 == d2, f"backends disagree on {name}"
        print(f"{name:<26}{d1:>5}{t1:>12.3f}{t2:>12.3f}")


if __name__ == "__main__":
    main()
