"""Bound catalog for W, W_c and w, and consistency checks against exact solver output.

Each entry carries its structural hypotheses; membership in the interval
(cyclic) colorable class is a further hypothesis of every bound, so checks
only fire once the solver has found a coloring. Irrational right-hand sides
are kept as floats and compared after flooring; rational ones are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from intcolor.multigraph import (
    GraphStats,
    MultiGraph,
    chromatic_index,
    circumference,
    diameter,
    max_matching_size,
    stats as graph_stats,
)

Number = Union[int, Fraction, float]

UPPER_W = "upper-W"
UPPER_WC = "upper-Wc"
LOWER_w = "lower-w"
LOWER_W = "lower-W"
OBSTRUCTION = "obstruction"

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: str
    value: Number | None
    applicable: bool
    reason: str

    @property
    def floor(self) -> int | None:
        return None if self.value is None else math.floor(self.value)

    @property
    def ceil(self) -> int | None:
        return None if self.value is None else math.ceil(self.value)


@dataclass(frozen=True)
class BoundsReport:
    entries: tuple[BoundEntry, ...]
    chromatic_index: int
    stats: GraphStats

    def get(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def applicable(self, kind: str | None = None) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable and (kind is None or e.kind == kind)]


@dataclass(frozen=True)
class Violation:
    channel: str  # "theorem" or "conjecture"
    name: str
    detail: str


class _Catalog:
    def __init__(self) -> None:
        self.entries: list[BoundEntry] = []

    def add(self, name: str, kind: str, conditions: dict[str, bool], value) -> None:
        failed = [k for k, ok in conditions.items() if not ok]
        if failed:
            self.entries.append(BoundEntry(name, kind, None, False, "fails: " + ", ".join(failed)))
        else:
            reason = "holds: " + ", ".join(conditions) if conditions else "unconditional"
            self.entries.append(BoundEntry(name, kind, value(), True, reason))


def divisibility_obstruction(g: MultiGraph) -> int | None:
    """Smallest d >= 2 dividing every degree but not the edge count."""
    deg = g.degrees()
    if not deg:
        return None
    common = 0
    for x in deg:
        common = math.gcd(common, x)
    for d in range(2, common + 1):
        if common % d == 0 and g.m % d != 0:
            return d
    return None


def _default_sparse_params(g: MultiGraph) -> tuple[Number, Number] | None:
    if "outerplanar" in g.flags:
        return 2, -3
    if "planar" in g.flags:
        return 3, -6
    return None


def evaluate_bounds(
    g: MultiGraph,
    st: GraphStats | None = None,
    sparse_params: tuple[Number, Number] | None = None,
) -> BoundsReport:
    """Every bound of the catalog, applicable or not, in a fixed order.

    ``sparse_params`` is the pair (a, b) of the sparse triangle-free bound
    (needs m <= a*n + b and 8b + 1 <= (3 - 4a)^2); it defaults from the
    planar / outerplanar flags.
    """
    st = st or graph_stats(g)
    if g.m == 0:
        raise ValueError("bounds need at least one edge")
    n, m, delta, mindeg = st.n, st.m, st.max_degree, st.min_degree
    simple, tf = st.simple, st.triangle_free and st.simple
    outerplanar = "outerplanar" in g.flags
    planar = "planar" in g.flags or outerplanar
    chi = chromatic_index(g)
    cat = _Catalog()

    cat.add("W.triangle_free", UPPER_W, {"simple": simple, "triangle-free": tf}, lambda: n - 1)
    cat.add("W.graph", UPPER_W, {"simple": simple, "n>=2": n >= 2}, lambda: 2 * n - 3)
    cat.add("W.graph_n3", UPPER_W, {"simple": simple, "n>=3": n >= 3}, lambda: 2 * n - 4)
    cat.add(
        "W.circumference", UPPER_W, {"2-connected": st.biconnected},
        lambda: 1 + (circumference(g) // 2) * (delta - 1),
    )
    cat.add("W.half_order", UPPER_W, {"2-connected": st.biconnected}, lambda: 1 + (n // 2) * (delta - 1))
    cat.add(
        "W.half_order_maxdeg4", UPPER_W, {"2-connected": st.biconnected, "max-degree<=4": delta <= 4},
        lambda: 3 * (n // 2) + 1,
    )
    cat.add(
        "W.planar_maxdeg4", UPPER_W,
        {"2-connected": st.biconnected, "simple": simple, "planar": planar, "max-degree<=4": delta <= 4},
        lambda: Fraction(3 * n, 2),
    )
    cat.add(
        "W.regular", UPPER_W, {"connected": st.connected, "regular": st.regular},
        lambda: 1 + (n // 2) * (delta - 1),
    )
    cat.add(
        "W.cubic", UPPER_W, {"connected": st.connected, "regular": st.regular, "cubic": delta == 3},
        lambda: n + 1,
    )
    cat.add(
        "W.diameter", UPPER_W, {"connected": st.connected, "simple": simple},
        lambda: (diameter(g) + 1) * (delta - 1) + 1,
    )
    cat.add(
        "W.diameter_bipartite", UPPER_W,
        {"connected": st.connected, "simple": simple, "bipartite": st.bipartite},
        lambda: diameter(g) * (delta - 1) + 1,
    )
    cat.add("W.planar", UPPER_W, {"simple": simple, "planar": planar}, lambda: Fraction(11 * n, 6))
    cat.add(
        "W.regular_log_lower", LOWER_W,
        {
            "simple": simple,
            "regular": st.regular,
            "chromatic-index=max-degree": chi == delta,
            "3<=n<=2^maxdeg+1": 3 <= n <= 2**delta + 1,
        },
        lambda: delta + (n - 1).bit_length() - 1,
    )

    cat.add(
        "Wc.triangle_free_delta", UPPER_WC,
        {"simple": simple, "connected": st.connected, "triangle-free": tf, "n>=2": n >= 2},
        lambda: n + delta - 2,
    )
    cat.add(
        "Wc.graph_delta", UPPER_WC, {"simple": simple, "connected": st.connected, "n>=3": n >= 3},
        lambda: 2 * n + delta - 5,
    )
    cat.add(
        "Wc.triangle_free_delta3", UPPER_WC,
        {"simple": simple, "triangle-free": tf, "max-degree>=3": delta >= 3},
        lambda: n + delta - 3,
    )
    cat.add(
        "Wc.graph_delta3", UPPER_WC, {"simple": simple, "max-degree>=3": delta >= 3},
        lambda: 2 * n + delta - 6,
    )
    cat.add(
        "Wc.triangle_free_maxdeg4", UPPER_WC,
        {"simple": simple, "triangle-free": tf, "max-degree<=4": delta <= 4},
        lambda: n,
    )
    cat.add(
        "Wc.triangle_free_sqrt3", UPPER_WC, {"simple": simple, "triangle-free": tf},
        lambda: (SQRT3 + 1) / 2 * (n - 1),
    )
    cat.add("Wc.graph_sqrt3", UPPER_WC, {"simple": simple, "n>=2": n >= 2}, lambda: (SQRT3 + 1) * n - 3)
    cat.add(
        "Wc.average_degree", UPPER_WC, {"simple": simple, "n>=3": n >= 3},
        lambda: 2 * n + st.average_degree - Fraction(7, 2),
    )
    cat.add("Wc.planar", UPPER_WC, {"simple": simple, "planar": planar}, lambda: 2 * n + 2)

    params = sparse_params if sparse_params is not None else _default_sparse_params(g)
    if params is None:
        cat.entries.append(
            BoundEntry("Wc.sparse_triangle_free", UPPER_WC, None, False, "fails: no (a, b) supplied")
        )
    else:
        a, b = Fraction(params[0]), Fraction(params[1])
        cat.add(
            "Wc.sparse_triangle_free", UPPER_WC,
            {
                "simple": simple,
                "triangle-free": tf,
                f"m<=a*n+b (a={a}, b={b})": m <= a * n + b,
                "8b+1<=(3-4a)^2": 8 * b + 1 <= (3 - 4 * a) ** 2,
            },
            lambda: n + 2 * a - 2,
        )
    cat.add(
        "Wc.triangle_free_planar", UPPER_WC, {"simple": simple, "triangle-free": tf, "planar": planar},
        lambda: n + 2,
    )
    cat.add(
        "Wc.triangle_free_outerplanar", UPPER_WC,
        {"simple": simple, "triangle-free": tf, "outerplanar": outerplanar, "n>=2": n >= 2},
        lambda: n + 1,
    )

    matching = max_matching_size(g)
    perfect = 2 * matching == n
    cat.add("w.matching", LOWER_w, {}, lambda: -(-n // (2 * matching)) * mindeg)
    cat.add("w.no_perfect_matching", LOWER_w, {"no-perfect-matching": not perfect}, lambda: max(delta, 2 * mindeg))
    cat.add(
        "w.odd_multigraph", LOWER_w,
        {"odd": st.odd, "m-n/2 odd": n % 2 == 0 and (m - n // 2) % 2 == 1},
        lambda: max(delta, 2 * mindeg),
    )
    d = divisibility_obstruction(g)
    cat.add("N.divisibility", OBSTRUCTION, {"divisor-found": d is not None}, lambda: d)
    return BoundsReport(tuple(cat.entries), chi, st)


def _as_results(results) -> dict:
    if hasattr(results, "mode"):
        results = [results]
    out = {}
    for r in results:
        out[r.mode] = r
    return out


def check_consistency(results, report: BoundsReport, st: GraphStats | None = None) -> list[Violation]:
    """Compare exact solver results with every applicable entry.

    ``results`` is one SolveResult or an iterable of them (one per mode).
    Conjecture checks land in the ``conjecture`` channel; everything else is
    a ``theorem`` violation and would mean a bug (or a false theorem).
    """
    st = st or report.stats
    by_mode = _as_results(results)
    iv = by_mode.get("interval")
    cy = by_mode.get("cyclic")
    out: list[Violation] = []

    def bad(name: str, detail: str, channel: str = "theorem") -> None:
        out.append(Violation(channel, name, detail))

    for e in report.applicable():
        if e.kind == UPPER_W and iv is not None and iv.feasible and iv.max_colors > e.floor:
            bad(e.name, f"W >= {iv.max_colors} > {e.value}")
        elif e.kind == UPPER_WC and cy is not None and cy.feasible and cy.max_colors > e.floor:
            bad(e.name, f"Wc >= {cy.max_colors} > {e.value}")
        elif e.kind == LOWER_W and iv is not None and iv.feasible and iv.exact and iv.max_colors < e.ceil:
            bad(e.name, f"W = {iv.max_colors} < {e.value}")
        elif e.kind == LOWER_w and iv is not None and iv.feasible and iv.min_colors < e.ceil:
            # nothing below the first feasible t timed out, or the minimum is unknown
            if not any(t < iv.min_colors for t in iv.timed_out):
                bad(e.name, f"w = {iv.min_colors} < {e.value}")
        elif e.kind == OBSTRUCTION and iv is not None and iv.feasible:
            bad(e.name, f"divisor {e.value} yet interval {iv.feasible[0]}-coloring found")

    delta = st.max_degree
    if iv is not None and iv.feasible and report.chromatic_index != delta:
        bad("chromatic-index", f"interval colorable but chromatic index {report.chromatic_index} != {delta}")
    if iv is not None and iv.exact and st.regular and report.chromatic_index == delta and not iv.feasible:
        bad("regular-class-one", "regular with chromatic index = max degree but not interval colorable")
    if iv is not None and cy is not None and iv.feasible:
        # Reducing an interval t-coloring modulo k gives a cyclic interval
        # k-coloring for every max degree <= k <= t.
        for k in range(delta, iv.max_colors + 1):
            if cy.lower <= k <= cy.cutoff and k not in cy.feasible and k not in cy.timed_out:
                bad("interval-implies-cyclic", f"interval {iv.max_colors}-coloring but no cyclic {k}-coloring")

    if cy is not None and cy.feasible:
        if st.simple and st.triangle_free and cy.max_colors > st.n:
            bad("conjecture.triangle_free", f"Wc >= {cy.max_colors} > n = {st.n}", "conjecture")
        if st.simple and st.n >= 2 and cy.max_colors > 2 * st.n - 3:
            bad("conjecture.graph", f"Wc >= {cy.max_colors} > 2n-3 = {2 * st.n - 3}", "conjecture")
    return out


BOUNDS_HEADER = ["graph-id", "bound-name", "kind", "applicable", "value"]


def format_value(value: Number | None) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def bound_rows(graph_id: str, report: BoundsReport) -> Iterable[list[str]]:
    for e in report.entries:
        yield [graph_id, e.name, e.kind, "yes" if e.applicable else "no", format_value(e.value)]
