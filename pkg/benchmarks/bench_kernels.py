#!/usr/bin/env python3
"""Benchmark the pure-Python search kernel against the compiled one.

Workloads cover the expensive call patterns: refutations (proving no
packing of a given size exists), constructive searches on dense hosts, and
the exhaustive gadget sweeps.  Run from the repository root:

    python benchmarks/bench_kernels.py
"""

import itertools
import random
import time

import strongpack as sp
from strongpack import _pycore

try:
    from strongpack import _fastcore
except ImportError:
    _fastcore = None


def _mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def workload_exceptional_refutations(kernel):
    """Prove all three exceptional compositions admit no 2-split."""
    for _, member in sp.EXCEPTIONAL_COMPOSITIONS:
        arcs = sorted(member.arcs)
        assert kernel.search_arc_disjoint(member.n, arcs, _mask(range(member.n)), 2) is None


def workload_bipartite_sweep(kernel):
    """Every terminal set of the 7-vertex complete bipartite host, packing
    sizes up to the answer plus one."""
    host = sp.complete_bipartite_digraph(3, 4)
    arcs = sorted(host.arcs)
    for k in range(2, 8):
        for S in itertools.combinations(range(7), k):
            s_mask = _mask(S)
            ell = 2
            while kernel.search_arc_disjoint(host.n, arcs, s_mask, ell) is not None:
                ell += 1
                if ell > 5:
                    break


def workload_cover_gadgets(kernel):
    """Arc-disjoint searches over the splitting gadgets of every two-sided
    graph with 3 vertices per side."""
    cells = [(x, y) for x in range(3) for y in range(3)]
    for bits in range(0, 1 << 9, 7):  # stride keeps the workload bounded
        edges = [cells[i] for i in range(9) if bits >> i & 1]
        g = sp.BipartiteGraph(3, 3, edges)
        out = sp.cover_packing_gadget_arc(g)
        arcs = sorted(out.digraph.arcs)
        s_mask = _mask(out.terminals)
        for ell in (1, 2, 3):
            kernel.search_arc_disjoint(out.digraph.n, arcs, s_mask, ell)


def workload_random_internal(kernel):
    """Internally disjoint searches on random symmetric hosts."""
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(5, 8)
        edges = {(i, i + 1) for i in range(n - 1)}
        pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges |= set(rng.sample(pool, min(len(pool), rng.randint(2, 6))))
        d = sp.biorientation(n, edges)
        arcs = sorted(d.arcs)
        s_mask = _mask(rng.sample(range(n), rng.randint(2, 4)))
        for ell in (2, 3):
            kernel.search_internally_disjoint(d.n, arcs, s_mask, ell)


WORKLOADS = [
    ("exceptional refutations", workload_exceptional_refutations),
    ("bipartite all-S sweep", workload_bipartite_sweep),
    ("cover gadget searches", workload_cover_gadgets),
    ("random internal packings", workload_random_internal),
]


def run(kernel, fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(kernel)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    if _fastcore is None:
        print("compiled kernel not built; run 'pip install -e . "
              "--no-build-isolation' first")
        return 1
    print(f"{'workload':<28} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in WORKLOADS:
        t_pure = run(_pycore, fn)
        t_fast = run(_fastcore, fn)
        print(f"{name:<28} {t_pure:>9.3f}s {t_fast:>9.3f}s "
              f"{t_pure / t_fast:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
