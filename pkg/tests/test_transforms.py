from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bipartite, connected_multigraphs, cycle, path
from intcolor.coloring import EdgeColoring, color_sets, verify_cyclic_interval, verify_interval
from intcolor.multigraph import MultiGraph, is_bipartite
from intcolor.solver import solve
from intcolor.transforms import (
    best_boundary,
    double_bipartite,
    drop_full_color,
    identify_vertices,
    rotate_cyclic,
    split_graph,
)

C3 = cycle(3)
C4 = cycle(4)


def col(t, *colors):
    return EdgeColoring(t, colors)


@st.composite
def cyclic_certificates(draw, mode="cyclic", simple=False):
    g = draw(connected_multigraphs(max_n=5, max_extra=4, simple=simple))
    r = solve(g, mode, cutoff=g.m)
    if not r.feasible:
        return g, None
    return g, r.certificates[draw(st.sampled_from(r.feasible))]


def edge_multiset(g: MultiGraph) -> Counter:
    return Counter((min(u, v), max(u, v)) for u, v in g.edges)


class TestRotate:
    def test_c3(self):
        assert rotate_cyclic(C3, col(3, 1, 2, 3), 1) == col(3, 2, 3, 1)

    def test_identity_and_full_turn(self):
        alpha = col(4, 1, 2, 3, 4)
        assert rotate_cyclic(C4, alpha, 0) == alpha
        assert rotate_cyclic(C4, alpha, 4) == alpha

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            rotate_cyclic(C4, col(4, 1, 3, 1, 3), 1)

    @given(cyclic_certificates(), st.integers(-10, 10))
    def test_validity_preserved(self, gc, k):
        g, alpha = gc
        if alpha is not None:
            assert verify_cyclic_interval(g, rotate_cyclic(g, alpha, k))


class TestBestBoundary:
    def test_c3(self):
        b, u = best_boundary(C3, col(3, 1, 2, 3))
        assert b == 1 and len(u) == 1 == (6 - 3) // 3

    def test_c4(self):
        _, u = best_boundary(C4, col(4, 1, 2, 3, 4))
        assert len(u) <= (8 - 4) // 4

    def test_interval_input(self):
        b, u = best_boundary(path(3), col(2, 1, 2))
        assert b == 1 and u == set()

    @given(cyclic_certificates())
    def test_pigeonhole_bound(self, gc):
        g, alpha = gc
        if alpha is not None:
            _, u = best_boundary(g, alpha)
            assert len(u) <= (2 * g.m - g.n) // alpha.t


class TestSplit:
    def test_c3_becomes_path(self):
        out = split_graph(C3, col(3, 1, 2, 3), 1)
        assert out.graph.n == 4 and out.graph.m == 3
        assert sorted(out.graph.degrees()) == [1, 1, 2, 2]
        assert out.coloring == col(3, 1, 2, 3)
        assert out.split_map == {0: (0, 3)}
        assert verify_interval(out.graph, out.coloring)

    def test_c4_becomes_path(self):
        alpha = col(4, 1, 2, 3, 4)
        b, _ = best_boundary(C4, alpha)
        out = split_graph(C4, alpha, b)
        assert out.graph.n == 5 and sorted(out.graph.degrees()) == [1, 1, 2, 2, 2]
        assert sorted(set(out.coloring.colors)) == [1, 2, 3, 4]

    def test_interval_input_unchanged(self):
        g = path(4)
        alpha = col(3, 1, 2, 3)
        out = split_graph(g, alpha)
        assert out.graph == g and out.coloring == alpha and not out.split_map

    def test_rotation_moves_boundary_to_one(self):
        alpha = col(3, 1, 2, 3)
        out = split_graph(C3, alpha, 2)
        assert out.coloring == rotate_cyclic(C3, alpha, 3 - 2 + 1)

    def test_bad_boundary(self):
        with pytest.raises(ValueError):
            split_graph(C3, col(3, 1, 2, 3), 4)

    @given(cyclic_certificates())
    def test_split_then_identify_restores_graph(self, gc):
        g, alpha = gc
        if alpha is None:
            return
        b, u = best_boundary(g, alpha)
        out = split_graph(g, alpha, b)
        assert out.graph.n == g.n + len(u) and out.graph.m == g.m
        assert set(out.split_map) == u
        assert verify_interval(out.graph, out.coloring)
        h = out.graph
        for v in sorted(u, reverse=True):
            lo, hi = out.split_map[v]
            h = identify_vertices(h, lo, hi)
        assert h == g
        assert sorted(h.degrees()) == sorted(g.degrees())
        assert edge_multiset(h) == edge_multiset(g)


class TestDouble:
    def test_k2(self):
        h, beta = double_bipartite(path(2), col(1, 1))
        assert h.n == 4 and h.m == 4
        assert sorted(beta.colors) == [1, 2, 2, 3]
        assert all(d == 2 for d in h.degrees())
        assert verify_interval(h, beta) and beta.t == 3

    def test_requires_simple(self):
        with pytest.raises(ValueError, match="simple"):
            double_bipartite(MultiGraph(2, ((0, 1), (0, 1))), col(2, 1, 2))

    def test_requires_interval(self):
        with pytest.raises(ValueError):
            double_bipartite(C3, col(3, 1, 2, 3))

    @given(cyclic_certificates(mode="interval", simple=True))
    def test_valid_on_twice_the_vertices(self, gc):
        g, alpha = gc
        if alpha is None:
            return
        h, beta = double_bipartite(g, alpha)
        assert h.n == 2 * g.n and beta.t == alpha.t + 2
        assert verify_interval(h, beta)
        assert is_bipartite(h)
        assert beta.t <= 2 * g.n - 1

    @given(cyclic_certificates(mode="interval", simple=True))
    def test_copies_share_lowest_color_before_recoloring(self, gc):
        g, alpha = gc
        if alpha is None:
            return
        h, beta = double_bipartite(g, alpha)
        g_sets = color_sets(g, alpha)
        pivot = min(i for i, s in enumerate(g_sets) if min(s) == 1)
        raw = list(beta.colors)
        assert raw[2 * g.m + pivot] == 1
        raw[2 * g.m + pivot] = max(g_sets[pivot]) + 2
        sets = color_sets(h, EdgeColoring(beta.t, tuple(raw)))
        for i in range(g.n):
            assert min(sets[i]) == min(sets[g.n + i])


class TestDropColor:
    def test_c4(self):
        for c in (1, 2):
            h, beta, _ = drop_full_color(C4, col(2, 1, 2, 1, 2), c)
            assert h.m == 2 and beta == col(1, 1, 1)
            assert verify_interval(h, beta)

    def test_k22_three_colors(self):
        # edges 0-2, 0-3, 1-2, 1-3; color 2 meets all four vertices here
        g = bipartite(2, 2)
        alpha = col(3, 1, 2, 2, 3)
        h, beta, _ = drop_full_color(g, alpha, 2)
        assert verify_interval(h, beta) and beta.t == 2
        with pytest.raises(ValueError, match="misses"):
            drop_full_color(g, alpha, 1)

    def test_isolated_vertices_removed(self):
        h, beta, kept = drop_full_color(path(4), col(2, 1, 2, 1), 1)
        assert kept == [1, 2]
        assert h == MultiGraph(2, ((0, 1),)) and beta == col(1, 1)

    def test_partial_color_rejected(self):
        with pytest.raises(ValueError, match="misses"):
            drop_full_color(path(4), col(3, 1, 2, 3), 1)

    @given(cyclic_certificates(mode="interval"))
    def test_valid_wherever_applicable(self, gc):
        g, alpha = gc
        if alpha is None:
            return
        sets = color_sets(g, alpha)
        for c in range(1, alpha.t + 1):
            if all(c in s for s in sets):
                h, beta, kept = drop_full_color(g, alpha, c)
                assert beta.t == alpha.t - 1
                if h.m:
                    assert verify_interval(h, beta)
                assert len(kept) == h.n


class TestIdentify:
    def test_path_leaves(self):
        h = identify_vertices(path(3), 0, 2)
        assert h.n == 2 and h.edges == ((0, 1), (1, 0))

    def test_c6_antipodal(self):
        h = identify_vertices(cycle(6), 0, 3)
        assert h.n == 5 and h.m == 6
        assert h.degrees()[0] == 4

    def test_adjacent_rejected(self):
        with pytest.raises(ValueError, match="adjacent"):
            identify_vertices(C4, 0, 1)

    def test_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            identify_vertices(C4, 2, 2)
