#!/usr/bin/env python3
"""Benchmark the compiled cut kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import random
import time

from paritysign.graphs import complete, cycle, enumerate_connected
from paritysign.kernels import _fallback

try:
    from paritysign.kernels import _cutkernel
except ImportError:
    _cutkernel = None


def _random_graph_adj(rng, n, p=0.5):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def timed(fn, *args):
    t0 = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - t0, result


def bench(name, fn_name, args):
    py_t, py_res = timed(getattr(_fallback, fn_name), *args)
    if _cutkernel is None:
        print(f"{name:<42} python {py_t:8.3f}s   (no compiled kernel)")
        return
    cy_t, cy_res = timed(getattr(_cutkernel, fn_name), *args)
    assert py_res == cy_res, f"backend mismatch in {name}"
    speedup = py_t / cy_t if cy_t > 0 else float("inf")
    print(f"{name:<42} python {py_t:8.3f}s   cython {cy_t:8.3f}s   x{speedup:,.1f}")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller instances")
    args = parser.parse_args()

    rng = random.Random(1)
    big = 18 if args.quick else 22
    g_rand = _random_graph_adj(rng, big)

    print(f"instance sizes: exact scan n={big}; canonical batch n=6")
    bench(f"min_balanced_cut K_{big}", "min_balanced_cut", (complete(big).adj, big))
    bench(f"min_balanced_cut random n={big}", "min_balanced_cut", (g_rand, big))
    bench(f"cut_spectrum random n={big}", "cut_spectrum", (g_rand, big))

    c = cycle(40)
    start = sum(1 << v for v in range(20))
    bench("swap_descent C_40", "swap_descent", (c.adj, 40, start))

    # canonical forms over all connected labeled graphs on 6 vertices
    packed = []
    pairs = [(i, j) for j in range(1, 6) for i in range(j)]
    for bits in range(1 << 15):
        adj = [0] * 6
        for k in range(15):
            if (bits >> (14 - k)) & 1:
                i, j = pairs[k]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        seen, frontier = 1, 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                nxt |= adj[v]
                f &= f - 1
            frontier = nxt & ~seen
            seen |= nxt
        if seen == 63:
            packed.append(bits)
    bench(
        f"canonical_bits_many ({len(packed)} graphs, n=6)",
        "canonical_bits_many",
        (packed, 6),
    )


if __name__ == "__main__":
    main()
