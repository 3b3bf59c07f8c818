#!/usr/bin/env python3
"""Measure skeleton construction time on Cartesian powers of the single arc.

The family has |V| = 2^k vertices, k * 2^(k-1) arcs and total degree k at
every vertex, so the per-arc work should stay near-linear in |E| with a
polylog drift from the growing degree.  Prints one row per power and the
ratio of consecutive times next to the ratio of consecutive arc counts.
"""

import argparse
import time

from digraph_pfd import Digraph, cartesian_product, cartesian_skeleton


def measure(k: int, repeats: int) -> tuple[int, int, float]:
    g = cartesian_product([Digraph(2, [(0, 1)])] * k).graph
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        cartesian_skeleton(g)
        best = min(best, time.perf_counter() - start)
    return g.n, g.arc_count, best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-k", type=int, default=6)
    parser.add_argument("--max-k", type=int, default=12)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    print(f"{'k':>3} {'|V|':>6} {'|E|':>8} {'time':>10} {'t-ratio':>8} {'E-ratio':>8}")
    prev = None
    for k in range(args.min_k, args.max_k + 1):
        n, m, t = measure(k, args.repeats)
        if prev is None:
            print(f"{k:>3} {n:>6} {m:>8} {t * 1e3:>8.1f}ms {'':>8} {'':>8}")
        else:
            print(
                f"{k:>3} {n:>6} {m:>8} {t * 1e3:>8.1f}ms"
                f" {t / prev[1]:>8.2f} {m / prev[0]:>8.2f}"
            )
        prev = (m, t)


if __name__ == "__main__":
    main()
