# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernel_py.search``; same branch order, same results."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

import time

from intcolor._kernel_py import (
    MAX_COLORS,
    MODE_CYCLIC,
    MODE_INTERVAL,
    STATUS_FOUND,
    STATUS_INFEASIBLE,
    STATUS_TIMEOUT,
    CLOCK_EVERY,
    previous_parallel,
    window_tables,
)


cdef struct Ctx:
    int m
    int t
    int first_hi
    int unused
    int64_t nodes
    double deadline
    int *eu
    int *ev
    int *prev
    int *colors
    int *count
    uint64_t *used
    uint64_t *starts
    uint64_t **cont


cdef int _rec(Ctx *s, int k) except -1:
    cdef int u, v, c, lo, hi, left, fresh
    cdef uint64_t bit, taken, su, sv, nsu, nsv
    cdef uint64_t *cu
    cdef uint64_t *cv
    if k == s.m:
        return 1
    s.nodes += 1
    if s.deadline > 0 and s.nodes % CLOCK_EVERY == 0 and time.monotonic() > s.deadline:
        return 2
    u = s.eu[k]
    v = s.ev[k]
    left = s.m - k - 1
    taken = s.used[u] | s.used[v]
    su = s.starts[u]
    sv = s.starts[v]
    cu = s.cont[u]
    cv = s.cont[v]
    lo = s.colors[s.prev[k]] if s.prev[k] >= 0 else 0
    hi = s.first_hi if k == 0 else s.t
    for c in range(lo, hi):
        bit = (<uint64_t>1) << c
        if taken & bit:
            continue
        nsu = su & cu[c]
        if not nsu:
            continue
        nsv = sv & cv[c]
        if not nsv:
            continue
        fresh = 1 if s.count[c] == 0 else 0
        if s.unused - fresh > left:
            continue
        s.colors[k] = c + 1
        s.used[u] |= bit
        s.used[v] |= bit
        s.starts[u] = nsu
        s.starts[v] = nsv
        s.count[c] += 1
        s.unused -= fresh
        r = _rec(s, k + 1)
        if r:
            return r
        s.unused += fresh
        s.count[c] -= 1
        s.starts[u] = su
        s.starts[v] = sv
        s.used[u] ^= bit
        s.used[v] ^= bit
    s.colors[k] = 0
    return 0


def search(int n, eu, ev, int t, int mode, double deadline=0.0, bint symmetry=True):
    cdef int m = len(eu)
    cdef int i, c, d, r
    cdef Ctx s
    if mode != MODE_INTERVAL and mode != MODE_CYCLIC:
        raise ValueError(f"unknown mode {mode}")
    if not 1 <= t <= MAX_COLORS:
        raise ValueError(f"t must lie in 1..{MAX_COLORS}")
    deg = [0] * n
    for a, b in zip(eu, ev):
        deg[a] += 1
        deg[b] += 1
    contain, full = window_tables(t, mode, deg)
    if m < t or any(full[d] == 0 for d in deg if d > 0):
        return STATUS_INFEASIBLE, None, 0
    prev = previous_parallel(eu, ev)
    degs = sorted(contain)

    s.m = m
    s.t = t
    s.unused = t
    s.nodes = 0
    s.deadline = deadline
    s.first_hi = t
    if symmetry:
        s.first_hi = (t + 1) // 2 if mode == MODE_INTERVAL else 1
    s.eu = <int *>malloc(max(m, 1) * sizeof(int))
    s.ev = <int *>malloc(max(m, 1) * sizeof(int))
    s.prev = <int *>malloc(max(m, 1) * sizeof(int))
    s.colors = <int *>malloc(max(m, 1) * sizeof(int))
    s.count = <int *>malloc(t * sizeof(int))
    s.used = <uint64_t *>malloc(max(n, 1) * sizeof(uint64_t))
    s.starts = <uint64_t *>malloc(max(n, 1) * sizeof(uint64_t))
    s.cont = <uint64_t **>malloc(max(n, 1) * sizeof(uint64_t *))
    cdef uint64_t *table = <uint64_t *>malloc(max(len(degs), 1) * t * sizeof(uint64_t))
    try:
        if (s.eu == NULL or s.ev == NULL or s.prev == NULL or s.colors == NULL or s.count == NULL
                or s.used == NULL or s.starts == NULL or s.cont == NULL or table == NULL):
            raise MemoryError()
        row = {}
        for i, d in enumerate(degs):
            row[d] = i
            for c in range(t):
                table[i * t + c] = <uint64_t>contain[d][c]
        for i in range(m):
            s.eu[i] = eu[i]
            s.ev[i] = ev[i]
            s.prev[i] = prev[i]
            s.colors[i] = 0
        for c in range(t):
            s.count[c] = 0
        for i in range(n):
            s.used[i] = 0
            s.starts[i] = <uint64_t>full[deg[i]]
            s.cont[i] = &table[row[deg[i]] * t]
        r = _rec(&s, 0)
        if r == 2:
            return STATUS_TIMEOUT, None, s.nodes
        if r == 1:
            return STATUS_FOUND, [s.colors[i] for i in range(m)], s.nodes
        return STATUS_INFEASIBLE, None, s.nodes
    finally:
        free(s.eu)
        free(s.ev)
        free(s.prev)
        free(s.colors)
        free(s.count)
        free(s.used)
        free(s.starts)
        free(s.cont)
        free(table)
