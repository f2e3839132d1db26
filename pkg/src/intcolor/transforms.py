"""Certificate-preserving constructions on colored multigraphs.

All functions check their input coloring and return fresh objects.
"""

from __future__ import annotations

from dataclasses import dataclass

from intcolor.coloring import (
    EdgeColoring,
    classify,
    CYCLIC_ONLY,
    color_sets,
    verify_cyclic_interval,
    verify_interval,
)
from intcolor.multigraph import MultiGraph


@dataclass(frozen=True)
class SplitOutcome:
    graph: MultiGraph
    coloring: EdgeColoring
    split_map: dict[int, tuple[int, int]]
    boundary: int
    rotation: int


def _require(verdict, what: str) -> None:
    if not verdict:
        raise ValueError(f"input is not {what}: {verdict.condition} {verdict.witness}")


def rotate_cyclic(g: MultiGraph, alpha: EdgeColoring, k: int) -> EdgeColoring:
    """Shift every color by k modulo t."""
    _require(verify_cyclic_interval(g, alpha), "a cyclic interval coloring")
    t = alpha.t
    return EdgeColoring(t, tuple((c - 1 + k) % t + 1 for c in alpha.colors))


def boundary_split_sets(g: MultiGraph, alpha: EdgeColoring) -> dict[int, set[int]]:
    """For each color b, the vertices that rotating b down to color 1 would leave wrapped.

    These are the vertices where b and its cyclic predecessor both appear,
    minus vertices that see every color (their set stays an interval under
    any rotation).
    """
    t = alpha.t
    out: dict[int, set[int]] = {b: set() for b in range(1, t + 1)}
    for v, s in enumerate(color_sets(g, alpha)):
        if len(s) == t:
            continue
        for b in s:
            if (b - 1 if b > 1 else t) in s:
                out[b].add(v)
    return out


def best_boundary(g: MultiGraph, alpha: EdgeColoring) -> tuple[int, set[int]]:
    """Color splitting the fewest vertices (smallest such color on ties)."""
    _require(verify_cyclic_interval(g, alpha), "a cyclic interval coloring")
    sets = boundary_split_sets(g, alpha)
    b = min(sets, key=lambda c: (len(sets[c]), c))
    return b, sets[b]


def split_graph(g: MultiGraph, alpha: EdgeColoring, boundary: int | None = None) -> SplitOutcome:
    """Rotate ``boundary`` to color 1, then split every vertex whose colors wrap.

    A wrapped vertex u keeps its id for the low side (colors below its
    smallest gap color) and gets a new id ``n + j`` for the high side, j
    counting split vertices in increasing order. The result is an interval
    t-coloring of a graph with the same edges and ids.
    """
    _require(verify_cyclic_interval(g, alpha), "a cyclic interval coloring")
    t = alpha.t
    if boundary is None:
        boundary = best_boundary(g, alpha)[0]
    if not 1 <= boundary <= t:
        raise ValueError(f"boundary color {boundary} outside 1..{t}")
    k = (t - boundary + 1) % t
    beta = EdgeColoring(t, tuple((c - 1 + k) % t + 1 for c in alpha.colors))
    sets = color_sets(g, beta)
    gap = {}
    for v, s in enumerate(sets):
        if classify(s, t) == CYCLIC_ONLY:
            gap[v] = min(c for c in range(2, t) if c not in s)
    split_map = {}
    for j, u in enumerate(sorted(gap)):
        split_map[u] = (u, g.n + j)
    edges = []
    for (u, v), c in zip(g.edges, beta.colors):
        if u in gap and c > gap[u]:
            u = split_map[u][1]
        if v in gap and c > gap[v]:
            v = split_map[v][1]
        edges.append((u, v))
    h = MultiGraph(g.n + len(gap), tuple(edges))
    verdict = verify_interval(h, beta)
    if not verdict:
        raise AssertionError(f"split did not produce an interval coloring: {verdict}")
    return SplitOutcome(h, beta, split_map, boundary, k)


def double_bipartite(g: MultiGraph, alpha: EdgeColoring) -> tuple[MultiGraph, EdgeColoring]:
    """Bipartite double cover plus a diagonal matching, colored with t + 2 colors.

    Vertex i of ``g`` becomes ``i`` (left copy) and ``n + i`` (right copy).
    Edge e = ij yields edges 2e = (i, n+j) and 2e+1 = (j, n+i), colored
    alpha(e) + 1; edge 2m + i = (i, n+i) gets (largest color at i) + 2,
    except the first i whose smallest color is 1, which gets color 1.
    """
    if not g.is_simple():
        raise ValueError("doubling needs a simple graph")
    _require(verify_interval(g, alpha), "an interval coloring")
    n = g.n
    sets = color_sets(g, alpha)
    if not all(sets):
        raise ValueError("doubling needs a graph without isolated vertices")
    edges: list[tuple[int, int]] = []
    colors: list[int] = []
    for (i, j), c in zip(g.edges, alpha.colors):
        edges += [(i, n + j), (j, n + i)]
        colors += [c + 1, c + 1]
    pivot = min(i for i in range(n) if sets[i] and min(sets[i]) == 1)
    for i in range(n):
        edges.append((i, n + i))
        colors.append(1 if i == pivot else max(sets[i]) + 2)
    return MultiGraph(2 * n, tuple(edges)), EdgeColoring(alpha.t + 2, tuple(colors))


def drop_full_color(
    g: MultiGraph, alpha: EdgeColoring, c: int
) -> tuple[MultiGraph, EdgeColoring, list[int]]:
    """Delete the class of color c (a perfect matching) and close the gap.

    Returns the new graph, its (t-1)-coloring, and for each new vertex its
    old id (vertices left isolated are dropped).
    """
    _require(verify_interval(g, alpha), "an interval coloring")
    sets = color_sets(g, alpha)
    missing = [v for v, s in enumerate(sets) if c not in s]
    if missing:
        raise ValueError(f"color {c} misses vertex {missing[0]}")
    kept = [(e, c2) for e, c2 in zip(g.edges, alpha.colors) if c2 != c]
    alive = sorted({x for (u, v), _ in kept for x in (u, v)})
    new_id = {old: i for i, old in enumerate(alive)}
    h = MultiGraph(len(alive), tuple((new_id[u], new_id[v]) for (u, v), _ in kept))
    beta = EdgeColoring(alpha.t - 1, tuple(c2 if c2 < c else c2 - 1 for _, c2 in kept))
    return h, beta, alive


def identify_vertices(g: MultiGraph, u: int, v: int) -> MultiGraph:
    """Merge non-adjacent u and v into min(u, v); larger ids shift down by one."""
    if u == v:
        raise ValueError("cannot identify a vertex with itself")
    for x in (u, v):
        if not 0 <= x < g.n:
            raise IndexError(f"vertex {x} out of range")
    if v in g.neighbors()[u]:
        raise ValueError(f"vertices {u} and {v} are adjacent; identifying them would create a loop")
    keep, gone = min(u, v), max(u, v)

    def relabel(x: int) -> int:
        if x == gone:
            return keep
        return x - 1 if x > gone else x

    return MultiGraph(g.n - 1, tuple((relabel(a), relabel(b)) for a, b in g.edges), g.flags)
