"""Exact decision and optimization for (cyclic) interval colorings."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from intcolor import kernel
from intcolor.coloring import EdgeColoring, verify
from intcolor.multigraph import MultiGraph, dfs_edge_order, is_connected

MODES = ("interval", "cyclic")
COLORABLE = "colorable"
NOT_WITHIN_CUTOFF = "not-colorable-within-cutoff"
PROVEN_NOT = "proven-not-colorable"
TIMEOUT = "timeout"

ORACLE_MAX_EDGES = 8
_ORACLE_CHUNK = 1 << 18


class SearchTimeout(RuntimeError):
    """A decision ran past its deadline."""


@dataclass(frozen=True)
class SolveResult:
    mode: str
    lower: int
    cutoff: int
    m: int
    feasible: tuple[int, ...]
    certificates: dict[int, EdgeColoring] = field(compare=False)
    verdict: str
    timed_out: tuple[int, ...] = ()
    obstruction: int | None = None

    @property
    def min_colors(self) -> int | None:
        return self.feasible[0] if self.feasible else None

    @property
    def max_colors(self) -> int | None:
        return self.feasible[-1] if self.feasible else None

    @property
    def exact(self) -> bool:
        """True when the feasible set is the whole spectrum (searched up to m)."""
        return not self.timed_out and self.cutoff >= self.m


def _mode_code(mode: str) -> int:
    if mode == "interval":
        return kernel.MODE_INTERVAL
    if mode == "cyclic":
        return kernel.MODE_CYCLIC
    raise ValueError(f"unknown mode {mode!r}")


def _check_graph(g: MultiGraph) -> None:
    if g.n == 0 or min(g.degrees()) == 0:
        raise ValueError("solver input must have no isolated vertices")
    if not is_connected(g):
        raise ValueError("solver input must be connected")


def _check_instance(g: MultiGraph, t: int) -> None:
    _check_graph(g)
    deg = g.degrees()
    if not max(deg) <= t <= g.m:
        raise ValueError(f"t={t} outside [max degree, m] = [{max(deg)}, {g.m}]")


def decide(
    g: MultiGraph,
    t: int,
    mode: str,
    deadline: float | None = None,
    symmetry: bool = True,
) -> EdgeColoring | None:
    """A (cyclic) interval t-coloring of ``g``, or None when there is none."""
    code = _mode_code(mode)
    _check_instance(g, t)
    order = dfs_edge_order(g)
    eu = [g.edges[e][0] for e in order]
    ev = [g.edges[e][1] for e in order]
    status, found, _ = kernel.search(g.n, eu, ev, t, code, deadline or 0.0, symmetry)
    if status == kernel.STATUS_TIMEOUT:
        raise SearchTimeout(f"t={t} {mode}")
    if status == kernel.STATUS_INFEASIBLE:
        return None
    colors = [0] * g.m
    for e, c in zip(order, found):
        colors[e] = c
    return EdgeColoring(t, tuple(colors))


def exists_interval_coloring(g: MultiGraph, t: int, deadline: float | None = None) -> EdgeColoring | None:
    return decide(g, t, "interval", deadline)


def exists_cyclic_interval_coloring(g: MultiGraph, t: int, deadline: float | None = None) -> EdgeColoring | None:
    return decide(g, t, "cyclic", deadline)


def default_cutoff(g: MultiGraph, mode: str) -> int:
    """min(m, smallest applicable proven upper bound for the mode)."""
    from intcolor.bounds import evaluate_bounds

    kind = "upper-W" if mode == "interval" else "upper-Wc"
    best = g.m
    for entry in evaluate_bounds(g).entries:
        if entry.kind == kind and entry.applicable:
            best = min(best, math.floor(entry.value))
    return best


def solve(
    g: MultiGraph,
    mode: str,
    cutoff: int | None = None,
    time_budget: float | None = None,
) -> SolveResult:
    """Decide every t in [max degree, cutoff] independently.

    ``time_budget`` (seconds) bounds the whole call; decisions that run out
    of time are listed in ``timed_out`` and the verdict becomes ``timeout``.
    """
    _mode_code(mode)
    _check_graph(g)
    lower = max(g.degrees())
    if cutoff is None:
        cutoff = default_cutoff(g, mode)
    cutoff = min(cutoff, g.m)
    deadline = time.monotonic() + time_budget if time_budget else None
    feasible = []
    certificates = {}
    timed_out = []
    for t in range(lower, cutoff + 1):
        try:
            alpha = decide(g, t, mode, deadline)
        except SearchTimeout:
            timed_out.append(t)
            continue
        if alpha is not None:
            feasible.append(t)
            certificates[t] = alpha
    obstruction = None
    if mode == "interval":
        from intcolor.bounds import divisibility_obstruction

        obstruction = divisibility_obstruction(g)
    if feasible:
        verdict = COLORABLE
    elif timed_out:
        verdict = TIMEOUT
    elif cutoff == g.m or obstruction is not None:
        verdict = PROVEN_NOT
    else:
        verdict = NOT_WITHIN_CUTOFF
    return SolveResult(
        mode=mode,
        lower=lower,
        cutoff=cutoff,
        m=g.m,
        feasible=tuple(feasible),
        certificates=certificates,
        verdict=verdict,
        timed_out=tuple(timed_out),
        obstruction=obstruction,
    )


def result_row(graph_id: str, g: MultiGraph, result: SolveResult) -> list[str]:
    return [
        graph_id,
        result.mode,
        str(max(g.degrees())),
        str(g.m),
        "" if result.min_colors is None else str(result.min_colors),
        "" if result.max_colors is None else str(result.max_colors),
        ";".join(str(t) for t in result.feasible),
        result.verdict,
    ]


RESULT_HEADER = ["graph-id", "mode", "delta", "m", "wmin", "wmax", "feasible-set", "verdict"]


# -- brute-force oracle ----------------------------------------------------------


def _oracle_masks(g: MultiGraph, colors: np.ndarray, t: int, mode: str) -> np.ndarray:
    """Row-wise check of the coloring definition over a block of assignments."""
    ok = np.ones(colors.shape[0], dtype=bool)
    bits = np.left_shift(np.int64(1), colors.astype(np.int64) - 1)
    everything = np.bitwise_or.reduce(bits, axis=1)
    ok &= everything == (1 << t) - 1
    deg = g.degrees()
    inc = g.incident()
    for v in range(g.n):
        if not inc[v]:
            continue
        mask = np.bitwise_or.reduce(bits[:, inc[v]], axis=1)
        ok &= np.bitwise_count(mask) == deg[v]
        block = (1 << deg[v]) - 1
        if mode == "interval":
            ok &= (mask // (mask & -mask)) == block
        else:
            arc = np.zeros_like(ok)
            full = (1 << t) - 1
            for r in range(t):
                rot = ((mask >> r) | (mask << (t - r))) & full
                arc |= rot == block
            ok &= arc
    return ok


def oracle_witness(g: MultiGraph, t: int, mode: str) -> EdgeColoring | None:
    """Scan all t**m assignments; return the first valid one in index order."""
    if g.m > ORACLE_MAX_EDGES:
        raise ValueError(f"oracle limited to {ORACLE_MAX_EDGES} edges, got {g.m}")
    _mode_code(mode)
    if t < 1 or t > g.m:
        return None
    total = t ** g.m
    powers = t ** np.arange(g.m - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _ORACLE_CHUNK):
        codes = np.arange(start, min(total, start + _ORACLE_CHUNK), dtype=np.int64)
        colors = (codes[:, None] // powers) % t + 1
        hits = np.flatnonzero(_oracle_masks(g, colors, t, mode))
        if hits.size:
            alpha = EdgeColoring(t, tuple(int(c) for c in colors[hits[0]]))
            verdict = verify(g, alpha, mode)
            if not verdict:
                raise AssertionError(f"oracle filter and verifier disagree: {verdict}")
            return alpha
    return None


def oracle_enumerate(g: MultiGraph, t: int, mode: str) -> bool:
    return oracle_witness(g, t, mode) is not None
