"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]

Each workload calls the kernel functions directly with identical inputs, so
caches in the higher-level API do not hide the difference.
"""

import argparse
import statistics
import time

import numpy as np

from eulerk.groups import _kernels_py, build_catalog_group, canon, homs
from eulerk.groups._backend import BACKEND, MODE_ALL

try:
    from eulerk.groups import _kernels as _compiled
except ImportError:
    _compiled = None

G = build_catalog_group

SEARCH_PAIRS = [("C2xC2xC2", "D4xC2"), ("D4", "S4"), ("Q8xC2", "D4xC2xC2"), ("C4xC2xC2", "Q8xC4")]
COUNT_PAIRS = [("C2xC2xC2xC2xC2", "Q8xC2xC2"), ("D4xC2xC2", "D4xC2xC2"), ("S4", "S4")]
CANON_GROUPS = ["S4", "D4xC2xC2", "Q8xC4", "D8xC2", "D3xC6"]


def _search_args(a, b):
    g, h = G(a), G(b)
    cand, counts, _ = homs._candidates(g, h, False)
    return g.array, np.array(g.generators, dtype=np.int32), h.array, cand, counts, MODE_ALL


def _count_args(a, b):
    g, h = G(a), G(b)
    gens, cand, counts = homs._prepare(g, h, False)
    return g.array, gens, h.array, np.array(h.inverses, dtype=np.int32), cand, counts, False


def _time(fn, repeat):
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs)


def workloads(quick):
    pairs = SEARCH_PAIRS[:2] if quick else SEARCH_PAIRS
    for a, b in pairs:
        args = _search_args(a, b)
        yield f"search_homs {a} -> {b}", lambda k, args=args: k.search_homs(*args)
    for a, b in (COUNT_PAIRS[1:] if quick else COUNT_PAIRS):
        args = _count_args(a, b)
        yield f"count_reps {a} -> {b}", lambda k, args=args: k.count_reps(*args)
    for spec in (CANON_GROUPS[:2] if quick else CANON_GROUPS):
        g = G(spec)

        # _least_table walks order types itself; swap the kernel module under it
        def run(k, g=g):
            saved = canon._backend.kernels
            canon._backend.kernels = k
            try:
                canon._least_table(g)
            finally:
                canon._backend.kernels = saved

        yield f"canonical_table {spec}", run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workload set")
    args = ap.parse_args(argv)

    print(f"active backend: {BACKEND}")
    if _compiled is None:
        print("compiled kernels not built; timing the Python fallback only")
    header = f"{'workload':48s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, fn in workloads(args.quick):
        py = _time(lambda: fn(_kernels_py), args.repeat)
        if _compiled is None:
            print(f"{name:48s} {py:11.4f} {'-':>11s} {'-':>8s}")
            continue
        cy = _time(lambda: fn(_compiled), args.repeat)
        print(f"{name:48s} {py:11.4f} {cy:11.4f} {py / cy if cy else float('inf'):7.1f}x")


if __name__ == "__main__":
    main()
