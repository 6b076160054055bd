"""Compare the compiled search kernels against the pure-Python twin.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Both backends run the same branch-and-bound searches with identical branch
order, so node counts must agree exactly; only wall-clock time differs.
"""

from __future__ import annotations

import argparse
import time

from gridband.backend import BACKEND, csr_adjacency, kernels, python_kernels
from gridband.graphs import complete_bipartite, grid, wheel

CASES = [
    ("bandwidth grid(4,4) b=3 (refute)", grid(4, 4), "decide", 3),
    ("bandwidth grid(4,4) b=4 (witness)", grid(4, 4), "decide", 4),
    ("bandwidth grid(5,4) b=4 (witness)", grid(5, 4), "decide", 4),
    ("bandwidth wheel(11) b=4 (refute)", wheel(11), "decide", 4),
    ("bandwidth bipartite(4,4) b=4 (refute)", complete_bipartite(4, 4), "decide", 4),
    ("min-long grid(4,4) t=3", grid(4, 4), "minlong", 3),
    ("min-long grid(4,3) t=2", grid(4, 3), "minlong", 2),
    ("vi table grid(4,4)", grid(4, 4), "vi", None),
]


def run_case(module, g, mode, arg):
    if mode == "vi":
        from gridband.backend import neighbor_masks

        masks = neighbor_masks(g)
        start = time.perf_counter()
        table = module.vi_table(g.vertex_count, masks)
        return time.perf_counter() - start, table[-1], 1 << g.vertex_count
    flat, ptr = csr_adjacency(g)
    start = time.perf_counter()
    if mode == "decide":
        status, nodes, _ = module.decide_bandwidth(
            g.vertex_count, flat, ptr, arg, 10**9, 0.0
        )
        value = status
    else:
        value, _, nodes, _ = module.min_long_edges_search(
            g.vertex_count, flat, ptr, arg, g.edge_count + 1, 10**9, 0.0
        )
    return time.perf_counter() - start, value, nodes


def best_of(module, g, mode, arg, repeat):
    times = []
    for _ in range(repeat):
        elapsed, value, nodes = run_case(module, g, mode, arg)
        times.append(elapsed)
    return min(times), value, nodes


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if BACKEND != "compiled":
        print("warning: compiled backend unavailable; comparing python to itself")
    print(f"active backend: {BACKEND}; best of {args.repeat} runs\n")
    header = f"{'case':42s} {'compiled':>10s} {'python':>10s} {'speedup':>8s} {'nodes':>9s}"
    print(header)
    print("-" * len(header))
    for name, g, mode, arg in CASES:
        t_c, v_c, n_c = best_of(kernels, g, mode, arg, args.repeat)
        t_p, v_p, n_p = best_of(python_kernels, g, mode, arg, args.repeat)
        assert (v_c, n_c) == (v_p, n_p), f"backend mismatch on {name}"
        print(
            f"{name:42s} {t_c * 1e3:9.2f}ms {t_p * 1e3:9.2f}ms "
            f"{t_p / t_c:7.1f}x {n_c:9d}"
        )


if __name__ == "__main__":
    main()
