"""Compare the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Times each kernel on the same inputs with both backends and prints the
speedup; also times a full verification run of a small family under each
backend (the latter in a subprocess, since the backend is chosen at import).
"""

import argparse
import os
import random
import subprocess
import sys
import time

from stablegraph import _pykernels
from stablegraph.graph import StableGraph, _invariant_blocks
from stablegraph.weak import WeakParams

try:
    from stablegraph import _ckernels
except ImportError:
    _ckernels = None


def random_graphs(count, nv, ne, rng):
    out = []
    for _ in range(count):
        edges = [(rng.randrange(v), v) for v in range(1, nv)]
        edges += [(rng.randrange(nv), rng.randrange(nv)) for _ in range(ne - len(edges))]
        out.append(StableGraph([rng.randrange(0, 400) for _ in range(nv)], [0] * nv, edges))
    return out


def kernel_cases(graphs, p):
    cases = []
    for G in graphs:
        nv = G.num_vertices
        eu = [i for i, _ in G.edges]
        ev = [j for _, j in G.edges]
        th = list(p.thresholds(nv))
        genera = _pykernels.subset_genera(nv, list(G.weights), eu, ev)
        adj, vblock, posblock = _invariant_blocks(StableGraph((0,) * nv, G.legs, G.edges))
        flat = [x for row in adj for x in row]
        cases.append((nv, list(G.weights), eu, ev, th, genera, flat, vblock, posblock))
    return cases


KERNELS = {
    "subset_genera": lambda m, c: m.subset_genera(c[0], c[1], c[2], c[3]),
    "max_weak_mask": lambda m, c: m.max_weak_mask(c[0], c[1], c[2], c[3], c[4]),
    "union_closure_violation": lambda m, c: m.union_closure_violation(c[0], c[5], c[4]),
    "genus_union_bound_violation": lambda m, c: m.genus_union_bound_violation(c[0], c[5], 5),
    "canonical_permutation": lambda m, c: m.canonical_permutation(c[0], c[6], c[7], c[8]),
}


def bench(fn, module, cases, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for c in cases:
            fn(module, c)
        best = min(best, time.perf_counter() - t0)
    return best


def end_to_end(pure):
    env = dict(os.environ, STABLEGRAPH_PURE_PYTHON="1" if pure else "0")
    code = ("import time;from stablegraph import *;t=time.perf_counter();"
            "f=enumerate_family(WeakParams(3),63,0);r=run_suite(f);"
            "print(time.perf_counter()-t, r.overall)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    secs, overall = out.stdout.split()
    return float(secs), overall


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--count", type=int, default=300)
    args = ap.parse_args()
    if _ckernels is None:
        sys.exit("compiled kernels are not built; run `pip install -e .` first")
    rng = random.Random(0)
    p = WeakParams(9)
    cases = kernel_cases(random_graphs(args.count, 6, 5, rng), p)
    print(f"{'kernel':30s} {'python (s)':>11s} {'cython (s)':>11s} {'speedup':>8s}")
    for name, fn in KERNELS.items():
        assert all(fn(_pykernels, c) == fn(_ckernels, c) for c in cases[:20])
        tp = bench(fn, _pykernels, cases, args.repeat)
        tc = bench(fn, _ckernels, cases, args.repeat)
        print(f"{name:30s} {tp:11.4f} {tc:11.4f} {tp / tc:7.1f}x")
    tp, op = end_to_end(True)
    tc, oc = end_to_end(False)
    print(f"{'verify k=3 g=63 n=0 (all)':30s} {tp:11.4f} {tc:11.4f} {tp / tc:7.1f}x   [{op}/{oc}]")


if __name__ == "__main__":
    main()
