from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from intcolor.multigraph import MultiGraph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def complete(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


@st.composite
def connected_multigraphs(draw, max_n: int = 5, max_extra: int = 4, simple: bool = False):
    """Random spanning tree plus extra edges (parallel ones allowed unless ``simple``)."""
    n = draw(st.integers(2, max_n))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(draw(st.integers(0, max_extra))):
        u, v = draw(st.sampled_from(pairs))
        if simple and ((u, v) in edges or (v, u) in edges):
            continue
        edges.append((u, v) if draw(st.booleans()) else (v, u))
    order = draw(st.permutations(edges))
    return MultiGraph(n, tuple(order))


@pytest.fixture
def k4() -> MultiGraph:
    return complete(4)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
