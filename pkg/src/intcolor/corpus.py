"""Small-graph corpora: exhaustive generation and graph6 ingestion."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator

import numpy as np

from intcolor.multigraph import GraphFormatError, MultiGraph, from_graph6, is_triangle_free, to_graph6

GENERATOR_MAX_N = 7
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853)


@lru_cache(maxsize=None)
def _pair_tables(n: int) -> tuple[list[tuple[int, int]], np.ndarray]:
    """Vertex pairs in row-major order and, per permutation, where each pair lands."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {p: k for k, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    table = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for r, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            table[r, k] = index[(a, b) if a < b else (b, a)]
    return pairs, table


def canonical_code(g: MultiGraph) -> int:
    """Minimum upper-triangle adjacency encoding over all vertex permutations.

    Bit ``len(pairs) - 1 - k`` stands for the k-th pair in row-major order,
    so earlier pairs are more significant. Simple graphs only.
    """
    if not g.is_simple():
        raise ValueError("canonical form is defined for simple graphs")
    if g.n <= 1:
        return 0
    pairs, table = _pair_tables(g.n)
    index = {p: k for k, p in enumerate(pairs)}
    present = np.array([index[(min(u, v), max(u, v))] for u, v in g.edges], dtype=np.int64)
    weights = np.left_shift(np.int64(1), len(pairs) - 1 - table[:, present])
    return int(weights.sum(axis=1).min())


def from_code(n: int, code: int) -> MultiGraph:
    """Inverse of the encoding used by ``canonical_code``."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    size = len(pairs)
    return MultiGraph(n, tuple(p for k, p in enumerate(pairs) if code >> (size - 1 - k) & 1))


def canonical_form(g: MultiGraph) -> MultiGraph:
    return from_code(g.n, canonical_code(g))


def canonical_id(g: MultiGraph) -> str:
    """graph6 string of the canonical form, used as a stable graph id."""
    return to_graph6(canonical_form(g))


def _connected_by_order(max_n: int, triangle_free: bool) -> list[list[MultiGraph]]:
    # Every connected graph has a vertex whose removal leaves it connected,
    # and deleting a vertex keeps a graph triangle-free, so extending the
    # previous layer by one vertex reaches every graph of the next layer.
    layers = [[MultiGraph(1, ())]]
    for n in range(2, max_n + 1):
        seen: set[int] = set()
        layer = []
        for base in layers[-1]:
            for size in range(1, n):
                for nbrs in itertools.combinations(range(n - 1), size):
                    g = MultiGraph(n, base.edges + tuple((v, n - 1) for v in nbrs))
                    if triangle_free and not is_triangle_free(g):
                        continue
                    code = canonical_code(g)
                    if code not in seen:
                        seen.add(code)
                        layer.append((g.m, code))
        layers.append([from_code(n, code) for _, code in sorted(layer)])
    return layers


def generate_connected_graphs(
    max_n: int, triangle_free: bool = False, include_trivial: bool = False
) -> Iterator[MultiGraph]:
    """Non-isomorphic connected simple graphs with at most ``max_n`` vertices, in canonical form.

    The single-vertex graph is left out unless ``include_trivial``; it has
    no edges and no coloring questions to ask.
    """
    if max_n > GENERATOR_MAX_N:
        raise ValueError(
            f"builtin generator stops at {GENERATOR_MAX_N} vertices; ingest a graph6 file instead"
        )
    if max_n < 1:
        return
    for layer in _connected_by_order(max_n, triangle_free):
        for g in layer:
            if g.m or include_trivial:
                yield g


@dataclass(frozen=True)
class Graph6Record:
    line: int
    graph: MultiGraph | None
    error: str | None = None


def iter_graph6(lines) -> Iterator[Graph6Record]:
    for number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield Graph6Record(number, from_graph6(text))
        except GraphFormatError as exc:
            yield Graph6Record(number, None, str(exc))


def ingest_graph6(path: str | Path) -> Iterator[Graph6Record]:
    """One record per nonblank line; malformed lines become error records."""
    with open(path, encoding="ascii", errors="replace") as fh:
        yield from iter_graph6(fh)


def multiplicity_variants(g: MultiGraph, max_edges: int) -> Iterator[MultiGraph]:
    """Every multigraph obtained by giving each edge of simple ``g`` a multiplicity >= 1.

    Parallel copies sit next to each other in edge order. Only variants with
    at most ``max_edges`` edges are produced; ``g`` itself comes first.
    """
    k = g.m
    if k > max_edges:
        return

    def compositions(slots: int, budget: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            yield ()
            return
        for first in range(1, budget - slots + 2):
            for rest in compositions(slots - 1, budget - first):
                yield (first,) + rest

    for mult in sorted(compositions(k, max_edges), key=lambda c: (sum(c), c)):
        edges = tuple(e for e, c in zip(g.edges, mult) for _ in range(c))
        yield MultiGraph(g.n, edges, g.flags)
