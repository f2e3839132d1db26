"""Time the compiled search kernel against the pure-Python one.

Each case decides every t in [max degree, m] for one graph and mode, with
both kernels on identical edge orders; the colorings found must agree.

    python3 benchmarks/bench_kernel.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import statistics
import time

from intcolor import _kernel_py, kernel
from intcolor.constructions import build_complete_bipartite, build_gnr, build_hypercube
from intcolor.multigraph import MultiGraph, dfs_edge_order


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


CASES = [
    ("K_4,4", build_complete_bipartite(4, 4).graph, kernel.MODE_INTERVAL),
    ("K_4,4", build_complete_bipartite(4, 4).graph, kernel.MODE_CYCLIC),
    ("Q_3", build_hypercube(3).graph, kernel.MODE_INTERVAL),
    ("G_4,4", build_gnr(4, 4).graph, kernel.MODE_INTERVAL),
    ("K_6", complete_graph(6), kernel.MODE_INTERVAL),
    ("K_6", complete_graph(6), kernel.MODE_CYCLIC),
]


def sweep(search, g: MultiGraph, mode: int):
    order = dfs_edge_order(g)
    eu = [g.edges[e][0] for e in order]
    ev = [g.edges[e][1] for e in order]
    out = []
    nodes = 0
    for t in range(max(g.degrees()), g.m + 1):
        status, colors, k = search(g.n, eu, ev, t, mode)
        out.append((t, status, colors))
        nodes += k
    return out, nodes


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times), statistics.mean(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    compiled = kernel.compiled_search
    if compiled is None:
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation`")
    print(f"{'case':<8} {'mode':<9} {'nodes':>9} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, g, mode in CASES:
        ref, nodes = sweep(_kernel_py.search, g, mode)
        got, _ = sweep(compiled, g, mode)
        if ref != got:
            raise SystemExit(f"kernels disagree on {name}")
        py, _ = best_of(lambda: sweep(_kernel_py.search, g, mode), args.repeat)
        cy, _ = best_of(lambda: sweep(compiled, g, mode), args.repeat)
        label = "interval" if mode == kernel.MODE_INTERVAL else "cyclic"
        print(f"{name:<8} {label:<9} {nodes:>9} {py:>10.4f} {cy:>11.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
