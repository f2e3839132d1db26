"""Loopless multigraphs with identified parallel edges, and their invariants."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import networkx as nx

FLAG_NAMES = ("planar", "outerplanar")


class GraphFormatError(ValueError):
    """Raised for malformed graph text or graph6 input."""


@dataclass(frozen=True)
class MultiGraph:
    """Vertices are ``0..n-1``; edge ``i`` is ``edges[i] == (u, v)``.

    Parallel edges are allowed and told apart by their position. Loops are not.
    ``flags`` holds user-asserted properties (``planar``, ``outerplanar``);
    nothing here checks them.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    flags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        object.__setattr__(self, "flags", frozenset(self.flags))
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise ValueError(f"edge {i} is a loop at vertex {u}")
        unknown = self.flags - set(FLAG_NAMES)
        if unknown:
            raise ValueError(f"unknown flags: {sorted(unknown)}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def incident(self) -> list[list[int]]:
        """Edge ids incident to each vertex, in id order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return inc

    def neighbors(self) -> list[set[int]]:
        nbr: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return nbr

    def multiplicity(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = {}
        for u, v in self.edges:
            key = (min(u, v), max(u, v))
            mult[key] = mult.get(key, 0) + 1
        return mult

    def is_simple(self) -> bool:
        return all(k == 1 for k in self.multiplicity().values())

    def with_flags(self, *flags: str) -> MultiGraph:
        return MultiGraph(self.n, self.edges, self.flags | set(flags))

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    max_degree: int
    min_degree: int
    average_degree: Fraction
    connected: bool
    biconnected: bool
    bipartite: bool
    triangle_free: bool
    simple: bool
    even: bool
    odd: bool
    eulerian: bool
    regular: bool


def degree(g: MultiGraph, v: int) -> int:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range 0..{g.n - 1}")
    return sum((a == v) + (b == v) for a, b in g.edges)


def is_connected(g: MultiGraph, removed: int | None = None) -> bool:
    alive = [x for x in range(g.n) if x != removed]
    if not alive:
        return True
    nbr = g.neighbors()
    seen = {alive[0]}
    queue = deque([alive[0]])
    while queue:
        x = queue.popleft()
        for y in nbr[x]:
            if y != removed and y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(alive)


def is_biconnected(g: MultiGraph) -> bool:
    """Connected with no cut vertex.

    Two vertices joined by at least two parallel edges count as 2-connected
    (they lie on a cycle of length 2); a single edge does not.
    """
    if g.n < 2 or not is_connected(g):
        return False
    if g.n == 2:
        return g.m >= 2
    return all(is_connected(g, removed=x) for x in range(g.n))


def is_bipartite(g: MultiGraph) -> bool:
    side = [-1] * g.n
    nbr = g.neighbors()
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in nbr[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def is_triangle_free(g: MultiGraph) -> bool:
    nbr = g.neighbors()
    for u, v in g.edges:
        if nbr[u] & nbr[v]:
            return False
    return True


def stats(g: MultiGraph) -> GraphStats:
    if g.n < 1:
        raise ValueError("stats need at least one vertex")
    deg = g.degrees()
    connected = is_connected(g)
    even = all(d % 2 == 0 for d in deg)
    return GraphStats(
        n=g.n,
        m=g.m,
        max_degree=max(deg),
        min_degree=min(deg),
        average_degree=Fraction(2 * g.m, g.n),
        connected=connected,
        biconnected=is_biconnected(g),
        bipartite=is_bipartite(g),
        triangle_free=is_triangle_free(g),
        simple=g.is_simple(),
        even=even,
        odd=all(d % 2 == 1 for d in deg),
        eulerian=connected and even,
        regular=len(set(deg)) == 1,
    )


def circumference(g: MultiGraph) -> int:
    """Length of a longest cycle (0 if acyclic); a doubled edge is a 2-cycle."""
    best = 2 if any(k >= 2 for k in g.multiplicity().values()) else 0
    nbr = [sorted(s) for s in g.neighbors()]
    on_path = [False] * g.n

    # Each cycle is found from its smallest vertex s, walking only through larger vertices.
    def extend(s: int, x: int, length: int) -> None:
        nonlocal best
        for y in nbr[x]:
            if y == s and length >= 3:
                best = max(best, length)
            elif y > s and not on_path[y]:
                on_path[y] = True
                extend(s, y, length + 1)
                on_path[y] = False

    for s in range(g.n):
        if best == g.n:
            break
        on_path[s] = True
        extend(s, s, 1)
        on_path[s] = False
    return best


def distances_from(g: MultiGraph, s: int) -> list[int]:
    nbr = g.neighbors()
    dist = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in nbr[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def diameter(g: MultiGraph) -> int:
    if g.n == 0 or not is_connected(g):
        raise ValueError("diameter is defined for connected graphs only")
    return max(max(distances_from(g, s)) for s in range(g.n))


def max_matching_size(g: MultiGraph) -> int:
    """Size of a maximum matching (blossom augmenting paths via networkx)."""
    simple = nx.Graph()
    simple.add_nodes_from(range(g.n))
    simple.add_edges_from(g.edges)
    return len(nx.max_weight_matching(simple, maxcardinality=True))


def has_perfect_matching(g: MultiGraph) -> bool:
    return g.n % 2 == 0 and 2 * max_matching_size(g) == g.n


def proper_coloring(g: MultiGraph, t: int) -> list[int] | None:
    """A proper edge coloring with colors 1..t, or None.

    Plain backtracking; colors are interchangeable, so an edge may open at
    most one new color beyond those already in use.
    """
    if g.m == 0:
        return []
    order = dfs_edge_order(g)
    used = [0] * g.n
    colors = [0] * g.m

    def rec(k: int, top: int) -> bool:
        if k == len(order):
            return True
        e = order[k]
        u, v = g.edges[e]
        taken = used[u] | used[v]
        for c in range(1, min(t, top + 1) + 1):
            bit = 1 << c
            if taken & bit:
                continue
            colors[e] = c
            used[u] |= bit
            used[v] |= bit
            if rec(k + 1, max(top, c)):
                return True
            used[u] ^= bit
            used[v] ^= bit
        colors[e] = 0
        return False

    return colors if rec(0, 0) else None


def chromatic_index(g: MultiGraph) -> int:
    if g.m == 0:
        raise ValueError("chromatic index needs at least one edge")
    t = max(g.degrees())
    while proper_coloring(g, t) is None:
        t += 1
    return t


def dfs_edge_order(g: MultiGraph) -> list[int]:
    """Edges grouped by vertex along a DFS preorder, starting at a max-degree vertex.

    Every edge after the first shares an endpoint with an earlier one inside
    its component.
    """
    if g.m == 0:
        return []
    deg = g.degrees()
    inc = g.incident()
    nbr = [sorted(s) for s in g.neighbors()]
    placed = [False] * g.m
    visited = [False] * g.n
    order: list[int] = []
    starts = sorted(range(g.n), key=lambda x: (-deg[x], x))
    for root in starts:
        if visited[root]:
            continue
        stack = [root]
        while stack:
            x = stack.pop()
            if visited[x]:
                continue
            visited[x] = True
            for e in inc[x]:
                if not placed[e]:
                    placed[e] = True
                    order.append(e)
            for y in reversed(nbr[x]):
                if not visited[y]:
                    stack.append(y)
    return order


# -- text formats -------------------------------------------------------------


def format_graph(g: MultiGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    if g.flags:
        lines.append("#flags: " + ",".join(f for f in FLAG_NAMES if f in g.flags))
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> MultiGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise GraphFormatError(f"bad header line: {lines[0]!r}") from None
    body = lines[1:]
    flags: set[str] = set()
    if body and body[0].startswith("#"):
        head, _, rest = body[0][1:].partition(":")
        if head.strip() != "flags":
            raise GraphFormatError(f"bad flags line: {body[0]!r}")
        flags = {f.strip() for f in rest.split(",") if f.strip()}
        body = body[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for k, ln in enumerate(body):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line {k}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"edge line {k}: non-integer endpoint in {ln!r}") from None
    try:
        return MultiGraph(n, tuple(edges), frozenset(flags))
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def read_graph(path: str | Path) -> MultiGraph:
    return parse_graph(Path(path).read_text())


def write_graph(g: MultiGraph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))


def from_graph6(line: str) -> MultiGraph:
    """Decode one graph6 string; edges come in row-major order (i < j)."""
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text or any(not 63 <= ord(ch) <= 126 for ch in text):
        raise GraphFormatError(f"invalid graph6 characters in {line.strip()!r}")
    try:
        h = nx.from_graph6_bytes(text.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise GraphFormatError(f"bad graph6 string {text!r}: {exc}") from None
    edges = sorted((min(u, v), max(u, v)) for u, v in h.edges())
    return MultiGraph(h.number_of_nodes(), tuple(edges))


def to_graph6(g: MultiGraph) -> str:
    if not g.is_simple():
        raise ValueError("graph6 encodes simple graphs only")
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


def relabel(g: MultiGraph, perm: Sequence[int]) -> MultiGraph:
    """Vertex ``v`` becomes ``perm[v]``; edge ids are kept."""
    return MultiGraph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges), g.flags)


def from_edges(n: int, edges: Iterable[tuple[int, int]], *flags: str) -> MultiGraph:
    return MultiGraph(n, tuple(edges), frozenset(flags))
