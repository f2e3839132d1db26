"""Pure-Python backtracking kernel for (cyclic) interval edge colorings.

Every vertex of degree ``d`` must end up with a color set equal to one
window of ``d`` consecutive colors: a plain window inside ``1..t`` in
interval mode, a window that may wrap from ``t`` to ``1`` in cyclic mode.
Each vertex carries a bitmask of window starts still compatible with the
colors it already has; placing color ``c`` intersects it with the starts
whose window contains ``c``. An empty mask kills the branch.

The compiled kernel in ``_kernel.pyx`` implements the same search and must
return identical results.
"""

from __future__ import annotations

import time

MODE_INTERVAL = 1
MODE_CYCLIC = 2
MAX_COLORS = 64
STATUS_INFEASIBLE = 0
STATUS_FOUND = 1
STATUS_TIMEOUT = 2
CLOCK_EVERY = 4096


def window_tables(t: int, mode: int, degrees) -> tuple[dict[int, list[int]], dict[int, int]]:
    """For each degree d: per-color masks of window starts covering the color, and all starts."""
    contain: dict[int, list[int]] = {}
    full: dict[int, int] = {}
    for d in set(degrees):
        if d == 0:
            contain[d] = [0] * t
            full[d] = 0
            continue
        if mode == MODE_INTERVAL:
            nstarts = t - d + 1
            if nstarts <= 0:
                contain[d] = [0] * t
                full[d] = 0
                continue
            full[d] = (1 << nstarts) - 1
            masks = []
            for c in range(t):
                lo = max(0, c - d + 1)
                hi = min(c, nstarts - 1)
                masks.append(((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1) if lo <= hi else 0)
            contain[d] = masks
        else:
            if d > t:
                contain[d] = [0] * t
                full[d] = 0
                continue
            full[d] = (1 << t) - 1
            masks = []
            for c in range(t):
                mask = 0
                for s in range(t):
                    if (c - s) % t < d:
                        mask |= 1 << s
                masks.append(mask)
            contain[d] = masks
    return contain, full


def previous_parallel(eu, ev) -> list[int]:
    """Index of the previous edge with the same endpoints, or -1."""
    last: dict[tuple[int, int], int] = {}
    prev = []
    for k, (u, v) in enumerate(zip(eu, ev)):
        key = (u, v) if u < v else (v, u)
        prev.append(last.get(key, -1))
        last[key] = k
    return prev


def search(n, eu, ev, t, mode, deadline=0.0, symmetry=True):
    """Look for a coloring of edges ``(eu[k], ev[k])`` in the given order.

    Returns ``(status, colors, nodes)``; ``colors`` lists the color (1-based)
    of each edge in search order when ``status == STATUS_FOUND``.
    Parallel edges get increasing colors, and with ``symmetry`` the first
    edge takes a color in the lower half (interval) or color 1 (cyclic).
    Neither restriction changes feasibility.
    """
    m = len(eu)
    if mode not in (MODE_INTERVAL, MODE_CYCLIC):
        raise ValueError(f"unknown mode {mode}")
    if not 1 <= t <= MAX_COLORS:
        raise ValueError(f"t must lie in 1..{MAX_COLORS}")
    deg = [0] * n
    for u, v in zip(eu, ev):
        deg[u] += 1
        deg[v] += 1
    contain, full = window_tables(t, mode, deg)
    cont = [contain[d] for d in deg]
    starts = [full[d] for d in deg]
    if m < t or any(s == 0 for d, s in zip(deg, starts) if d > 0):
        return STATUS_INFEASIBLE, None, 0
    prev = previous_parallel(eu, ev)
    used = [0] * n
    colors = [0] * m
    count = [0] * t
    unused = t
    nodes = 0
    first_hi = t
    if symmetry:
        first_hi = (t + 1) // 2 if mode == MODE_INTERVAL else 1

    class _Timeout(Exception):
        pass

    def rec(k: int) -> bool:
        nonlocal unused, nodes
        if k == m:
            return True
        nodes += 1
        if deadline > 0 and nodes % CLOCK_EVERY == 0 and time.monotonic() > deadline:
            raise _Timeout
        u = eu[k]
        v = ev[k]
        left = m - k - 1
        taken = used[u] | used[v]
        su = starts[u]
        sv = starts[v]
        cu = cont[u]
        cv = cont[v]
        lo = colors[prev[k]] if prev[k] >= 0 else 0
        hi = first_hi if k == 0 else t
        for c in range(lo, hi):
            bit = 1 << c
            if taken & bit:
                continue
            nsu = su & cu[c]
            if not nsu:
                continue
            nsv = sv & cv[c]
            if not nsv:
                continue
            fresh = count[c] == 0
            if unused - fresh > left:
                continue
            colors[k] = c + 1
            used[u] |= bit
            used[v] |= bit
            starts[u] = nsu
            starts[v] = nsv
            count[c] += 1
            unused -= fresh
            if rec(k + 1):
                return True
            unused += fresh
            count[c] -= 1
            starts[u] = su
            starts[v] = sv
            used[u] ^= bit
            used[v] ^= bit
        colors[k] = 0
        return False

    try:
        found = rec(0)
    except _Timeout:
        return STATUS_TIMEOUT, None, nodes
    if found:
        return STATUS_FOUND, list(colors), nodes
    return STATUS_INFEASIBLE, None, nodes
