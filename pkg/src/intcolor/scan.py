"""Batch scans: solve every corpus graph exactly and check it against the bound catalog."""

from __future__ import annotations

import csv
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

import networkx as nx

from intcolor.bounds import (
    UPPER_W,
    UPPER_WC,
    BoundsReport,
    Violation,
    check_consistency,
    evaluate_bounds,
)
from intcolor.corpus import GENERATOR_MAX_N, canonical_id, generate_connected_graphs, ingest_graph6
from intcolor.multigraph import MultiGraph, is_connected, is_triangle_free, stats, to_graph6
from intcolor.solver import SolveResult, solve

log = logging.getLogger(__name__)

SCAN_MODES = ("interval", "cyclic", "both")
# Exhaustive canonical forms cost n! per graph; beyond this graph6 input is
# trusted to be isomorph-free and keyed by its own string.
CANONICAL_MAX_N = 8

ROW_HEADER = [
    "graph-id",
    "n",
    "m",
    "delta",
    "min-degree",
    "flags",
    "w",
    "W",
    "interval-feasible",
    "interval-verdict",
    "wc",
    "Wc",
    "cyclic-feasible",
    "cyclic-verdict",
    "obstruction",
    "violations",
    "conjectures",
    "tight-bounds",
]


@dataclass(frozen=True)
class ScanConfig:
    max_vertices: int
    max_degree: int | None = None
    triangle_free_only: bool = False
    mode: str = "both"
    graph6_path: str | None = None
    output_path: str | None = None
    time_budget: float | None = None
    detect_flags: bool = True

    def __post_init__(self) -> None:
        if self.mode not in SCAN_MODES:
            raise ValueError(f"mode must be one of {SCAN_MODES}")
        if self.graph6_path is None and self.max_vertices > GENERATOR_MAX_N:
            raise ValueError(
                f"builtin generator stops at {GENERATOR_MAX_N} vertices; use a graph6 file"
            )

    @property
    def modes(self) -> tuple[str, ...]:
        return ("interval", "cyclic") if self.mode == "both" else (self.mode,)


@dataclass
class ScanRow:
    graph_id: str
    graph: MultiGraph
    results: dict[str, SolveResult]
    report: BoundsReport
    violations: list[Violation]
    tight: list[str]

    @property
    def theorem_violations(self) -> list[Violation]:
        return [v for v in self.violations if v.channel == "theorem"]

    @property
    def conjecture_violations(self) -> list[Violation]:
        return [v for v in self.violations if v.channel == "conjecture"]

    def cells(self) -> list[str]:
        st = self.report.stats
        out = [
            self.graph_id,
            str(st.n),
            str(st.m),
            str(st.max_degree),
            str(st.min_degree),
            ";".join(sorted(self.graph.flags)),
        ]
        for mode in ("interval", "cyclic"):
            r = self.results.get(mode)
            if r is None:
                out += ["", "", "", "skipped"]
                continue
            out += [
                "" if r.min_colors is None else str(r.min_colors),
                "" if r.max_colors is None else str(r.max_colors),
                ";".join(map(str, r.feasible)),
                r.verdict,
            ]
        d = self.report.get("N.divisibility").value
        out += [
            "" if d is None else str(d),
            ";".join(v.name for v in self.theorem_violations),
            ";".join(v.name for v in self.conjecture_violations),
            ";".join(self.tight),
        ]
        return out


@dataclass
class ScanReport:
    rows: list[ScanRow] = field(default_factory=list)
    errors: list[tuple[int, str]] = field(default_factory=list)
    skipped: Counter = field(default_factory=Counter)

    @property
    def theorem_violations(self) -> list[tuple[str, Violation]]:
        return [(r.graph_id, v) for r in self.rows for v in r.theorem_violations]

    @property
    def conjecture_violations(self) -> list[tuple[str, Violation]]:
        return [(r.graph_id, v) for r in self.rows for v in r.conjecture_violations]

    def summary(self) -> list[tuple[str, str]]:
        verdicts: Counter = Counter()
        tight: Counter = Counter()
        excess = None
        for r in self.rows:
            for mode, res in r.results.items():
                verdicts[f"{mode}-{res.verdict}"] += 1
            tight.update(r.tight)
            cy = r.results.get("cyclic")
            if cy is not None and cy.feasible:
                gap = cy.max_colors - r.report.stats.n
                excess = gap if excess is None else max(excess, gap)
        out = [
            ("graphs", str(len(self.rows))),
            ("theorem-violations", str(len(self.theorem_violations))),
            ("conjecture-violations", str(len(self.conjecture_violations))),
            ("graph6-errors", str(len(self.errors))),
            ("max-Wc-minus-n", "" if excess is None else str(excess)),
        ]
        out += [(f"skipped-{k}", str(v)) for k, v in sorted(self.skipped.items())]
        out += [(f"verdict-{k}", str(v)) for k, v in sorted(verdicts.items())]
        out += [(f"tight-{k}", str(v)) for k, v in sorted(tight.items())]
        out += [(f"error-line-{line}", msg) for line, msg in self.errors]
        return out

    def write(self, path: str | Path) -> tuple[Path, Path]:
        path = Path(path)
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(ROW_HEADER)
            for r in self.rows:
                w.writerow(r.cells())
        summary_path = path.with_name(path.name + ".summary.csv")
        with open(summary_path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["key", "value"])
            w.writerows(self.summary())
        return path, summary_path


def detect_flags(g: MultiGraph) -> MultiGraph:
    """Attach planar / outerplanar flags computed by networkx."""
    h = nx.Graph(g.edges)
    h.add_nodes_from(range(g.n))
    flags = []
    if nx.check_planarity(h)[0]:
        flags.append("planar")
        apex = g.n
        h.add_edges_from((apex, v) for v in range(g.n))
        if nx.check_planarity(h)[0]:
            flags.append("outerplanar")
    return g.with_flags(*flags)


def tight_bounds(report: BoundsReport, results: dict[str, SolveResult]) -> list[str]:
    """Upper bounds met with equality by an exact maximum."""
    names = []
    for kind, mode in ((UPPER_W, "interval"), (UPPER_WC, "cyclic")):
        r = results.get(mode)
        if r is None or not r.exact or not r.feasible:
            continue
        for e in report.applicable(kind):
            if math.floor(e.value) == r.max_colors:
                names.append(e.name)
    return names


def scan_graph(g: MultiGraph, graph_id: str, config: ScanConfig) -> ScanRow:
    if config.detect_flags:
        g = detect_flags(g)
    st = stats(g)
    report = evaluate_bounds(g, st)
    results = {mode: solve(g, mode, cutoff=g.m, time_budget=config.time_budget) for mode in config.modes}
    violations = check_consistency(list(results.values()), report, st)
    return ScanRow(graph_id, g, results, report, violations, tight_bounds(report, results))


def _source(config: ScanConfig, report: ScanReport) -> Iterator[tuple[str, MultiGraph]]:
    if config.graph6_path is None:
        for g in generate_connected_graphs(config.max_vertices, config.triangle_free_only):
            yield canonical_id(g), g
        return
    seen: set[str] = set()
    for rec in ingest_graph6(config.graph6_path):
        if rec.graph is None:
            log.warning("graph6 line %d: %s", rec.line, rec.error)
            report.errors.append((rec.line, rec.error or ""))
            continue
        g = rec.graph
        if g.n > config.max_vertices:
            report.skipped["too-large"] += 1
            continue
        if g.m == 0 or not is_connected(g):
            report.skipped["disconnected"] += 1
            continue
        if config.triangle_free_only and not is_triangle_free(g):
            continue
        key = canonical_id(g) if g.n <= CANONICAL_MAX_N else to_graph6(g)
        if key in seen:
            report.skipped["duplicate"] += 1
            continue
        seen.add(key)
        yield key, g


def iter_rows(config: ScanConfig, report: ScanReport | None = None) -> Iterable[ScanRow]:
    report = report if report is not None else ScanReport()
    for graph_id, g in _source(config, report):
        if config.max_degree is not None and max(g.degrees()) > config.max_degree:
            continue
        yield scan_graph(g, graph_id, config)


def scan(config: ScanConfig) -> ScanReport:
    report = ScanReport()
    for row in iter_rows(config, report):
        report.rows.append(row)
    if config.output_path:
        report.write(config.output_path)
    return report
