"""Explicit graph families with known (cyclic) interval spectra."""

from __future__ import annotations

import math
from dataclasses import dataclass

from intcolor.coloring import EdgeColoring, verify
from intcolor.multigraph import MultiGraph


@dataclass(frozen=True)
class ConstructionOutput:
    graph: MultiGraph
    coloring: EdgeColoring | None = None
    claimed_spectrum: tuple[int, ...] | None = None
    mode: str = "interval"
    note: str = ""

    def __post_init__(self) -> None:
        if self.coloring is not None:
            verdict = verify(self.graph, self.coloring, self.mode)
            if not verdict:
                raise AssertionError(f"construction produced an invalid coloring: {verdict}")


def build_gnr(n: int, r: int) -> ConstructionOutput:
    """Ladder with bundled rungs whose interval spectrum tops out at 1 + n(r-1).

    Vertices ``u_i = i-1`` and ``v_i = n+i-1``. Edge order: the parallel
    bundles u_i v_i for i = 1..n, then for j = 1..n-1 the pair u_j u_{j+1},
    v_j v_{j+1}.
    """
    if n < 2 or r < 2:
        raise ValueError("G(n, r) needs n >= 2 and r >= 2")
    edges: list[tuple[int, int]] = []
    colors: list[int] = []
    for i in range(1, n + 1):
        if i == 1:
            bundle = range(1, r)
        elif i == n:
            bundle = range((n - 1) * (r - 1) + 2, n * (r - 1) + 2)
        else:
            bundle = range((i - 1) * (r - 1) + 2, i * (r - 1) + 1)
        for c in bundle:
            edges.append((i - 1, n + i - 1))
            colors.append(c)
    for j in range(1, n):
        c = j * (r - 1) + 1
        edges += [(j - 1, j), (n + j - 1, n + j)]
        colors += [c, c]
    t = 1 + n * (r - 1)
    return ConstructionOutput(
        MultiGraph(2 * n, tuple(edges)),
        EdgeColoring(t, tuple(colors)),
        None,
        note=f"W = 1 + n(r-1) = {t}",
    )


def build_cycle_cyclic(n: int) -> ConstructionOutput:
    """C_n colored 1..n around the cycle; reaches the cyclic maximum n."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    g = MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))
    return ConstructionOutput(
        g,
        EdgeColoring(n, tuple(range(1, n + 1))),
        None,
        mode="cyclic",
        note=f"W_c = n = {n}",
    )


def build_complete_bipartite(a: int, b: int) -> ConstructionOutput:
    """K_{a,b} with parts 0..a-1 and a..a+b-1; spectrum [a+b-gcd(a,b), a+b-1]."""
    if a < 1 or b < 1:
        raise ValueError("parts must be nonempty")
    g = MultiGraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))
    spectrum = tuple(range(a + b - math.gcd(a, b), a + b))
    return ConstructionOutput(g, None, spectrum, note="interval spectrum of K_{a,b}")


def build_hypercube(n: int) -> ConstructionOutput:
    """Q_n on bit strings 0..2^n-1; spectrum [n, n(n+1)/2]."""
    if n < 1:
        raise ValueError("hypercube dimension must be positive")
    edges = tuple(
        (x, x | (1 << k)) for x in range(1 << n) for k in range(n) if not x & (1 << k)
    )
    g = MultiGraph(1 << n, edges)
    return ConstructionOutput(g, None, tuple(range(n, n * (n + 1) // 2 + 1)), note="interval spectrum of Q_n")
