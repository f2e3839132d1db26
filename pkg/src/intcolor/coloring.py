"""Edge colorings, vertex spectra and the interval / cyclic interval predicates."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from intcolor.multigraph import GraphFormatError, MultiGraph

INTERVAL = "interval"
CYCLIC_ONLY = "cyclic-only"
NEITHER = "neither"


@dataclass(frozen=True)
class EdgeColoring:
    """Colors ``1..t``; ``colors[i]`` is the color of edge ``i``.

    ``t`` is declared, not inferred: the empty-class condition is checked
    against it.
    """

    t: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.t < 0:
            raise ValueError("t must be nonnegative")
        for i, c in enumerate(self.colors):
            if not 1 <= c <= self.t:
                raise ValueError(f"edge {i} has color {c} outside 1..{self.t}")

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, edge: int) -> int:
        return self.colors[edge]

    def reflected(self) -> EdgeColoring:
        return EdgeColoring(self.t, tuple(self.t + 1 - c for c in self.colors))


@dataclass(frozen=True)
class SpectrumEntry:
    vertex: int
    colors: frozenset[int]
    min_color: int | None
    max_color: int | None
    classification: str


@dataclass(frozen=True)
class Verdict:
    valid: bool
    condition: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.valid


def _check_total(g: MultiGraph, alpha: EdgeColoring) -> None:
    if len(alpha) != g.m:
        raise ValueError(f"coloring covers {len(alpha)} edges, graph has {g.m}")


def _is_interval(s: frozenset[int] | set[int]) -> bool:
    return not s or max(s) - min(s) + 1 == len(s)


def classify(s: frozenset[int] | set[int], t: int) -> str:
    if _is_interval(s):
        return INTERVAL
    rest = set(range(1, t + 1)) - s
    if rest and _is_interval(rest):
        return CYCLIC_ONLY
    return NEITHER


def color_sets(g: MultiGraph, alpha: EdgeColoring) -> list[set[int]]:
    _check_total(g, alpha)
    sets: list[set[int]] = [set() for _ in range(g.n)]
    for (u, v), c in zip(g.edges, alpha.colors):
        sets[u].add(c)
        sets[v].add(c)
    return sets


def spectrum(g: MultiGraph, alpha: EdgeColoring, v: int) -> SpectrumEntry:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range 0..{g.n - 1}")
    _check_total(g, alpha)
    s = frozenset(c for (a, b), c in zip(g.edges, alpha.colors) if v in (a, b))
    return SpectrumEntry(
        vertex=v,
        colors=s,
        min_color=min(s) if s else None,
        max_color=max(s) if s else None,
        classification=classify(s, alpha.t),
    )


def spectrum_report(g: MultiGraph, alpha: EdgeColoring) -> list[SpectrumEntry]:
    return [spectrum(g, alpha, v) for v in range(g.n)]


def _improper_pair(g: MultiGraph, alpha: EdgeColoring) -> tuple[int, int] | None:
    seen: dict[tuple[int, int], int] = {}
    for e, ((u, v), c) in enumerate(zip(g.edges, alpha.colors)):
        for x in (u, v):
            other = seen.get((x, c))
            if other is not None:
                return other, e
            seen[(x, c)] = e
    return None


def is_proper(g: MultiGraph, alpha: EdgeColoring) -> bool:
    _check_total(g, alpha)
    return _improper_pair(g, alpha) is None


def _verify(g: MultiGraph, alpha: EdgeColoring, allowed: tuple[str, ...]) -> Verdict:
    if len(alpha) != g.m:
        return Verdict(False, "not-total", (len(alpha), g.m))
    pair = _improper_pair(g, alpha)
    if pair is not None:
        return Verdict(False, "not-proper", pair)
    present = set(alpha.colors)
    for c in range(1, alpha.t + 1):
        if c not in present:
            return Verdict(False, "empty-color-class", (c,))
    for v, s in enumerate(color_sets(g, alpha)):
        if classify(s, alpha.t) not in allowed:
            return Verdict(False, "vertex-not-interval", (v,))
    return Verdict(True)


def verify_interval(g: MultiGraph, alpha: EdgeColoring) -> Verdict:
    return _verify(g, alpha, (INTERVAL,))


def verify_cyclic_interval(g: MultiGraph, alpha: EdgeColoring) -> Verdict:
    return _verify(g, alpha, (INTERVAL, CYCLIC_ONLY))


def verify(g: MultiGraph, alpha: EdgeColoring, mode: str) -> Verdict:
    if mode == "interval":
        return verify_interval(g, alpha)
    if mode == "cyclic":
        return verify_cyclic_interval(g, alpha)
    raise ValueError(f"unknown mode {mode!r}")


def cyclic_vertices(g: MultiGraph, alpha: EdgeColoring) -> dict[int, int]:
    """Vertices whose color set wraps from t to 1, each with its smallest gap color."""
    verdict = verify_cyclic_interval(g, alpha)
    if not verdict:
        raise ValueError(f"not a cyclic interval coloring: {verdict.condition} {verdict.witness}")
    out = {}
    for v, s in enumerate(color_sets(g, alpha)):
        if classify(s, alpha.t) == CYCLIC_ONLY:
            out[v] = min(c for c in range(2, alpha.t) if c not in s)
    return out


def split_colors(g: MultiGraph, alpha: EdgeColoring, v: int) -> set[int]:
    """Colors i with both i-1 and i (mod t, so 0 means t) present at v."""
    s = spectrum(g, alpha, v).colors
    t = alpha.t
    return {i for i in s if (i - 1 if i > 1 else t) in s}


# -- certificate format --------------------------------------------------------


def format_certificate(g: MultiGraph, alpha: EdgeColoring) -> str:
    _check_total(g, alpha)
    lines = [f"{alpha.t} {g.m}"]
    lines.extend(f"{e} {u} {v} {c}" for e, ((u, v), c) in enumerate(zip(g.edges, alpha.colors)))
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, g: MultiGraph | None = None) -> EdgeColoring:
    """Read a certificate; when ``g`` is given, endpoints must match its edges."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise GraphFormatError("certificate header must be 't m'")
    try:
        t, m = int(lines[0][0]), int(lines[0][1])
        rows = [tuple(int(x) for x in ln) for ln in lines[1:]]
    except ValueError:
        raise GraphFormatError("certificate contains a non-integer field") from None
    if len(rows) != m or any(len(r) != 4 for r in rows):
        raise GraphFormatError(f"expected {m} lines 'edge-id u v color'")
    if [r[0] for r in rows] != list(range(m)):
        raise GraphFormatError("edge ids must be 0..m-1 in order")
    if g is not None:
        if g.m != m:
            raise GraphFormatError(f"certificate has {m} edges, graph has {g.m}")
        for e, u, v, _ in rows:
            if {u, v} != set(g.edges[e]):
                raise GraphFormatError(f"edge {e} endpoints {u} {v} do not match the graph")
    try:
        return EdgeColoring(t, tuple(r[3] for r in rows))
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def read_certificate(path: str | Path, g: MultiGraph | None = None) -> EdgeColoring:
    return parse_certificate(Path(path).read_text(), g)


def write_certificate(g: MultiGraph, alpha: EdgeColoring, path: str | Path) -> None:
    Path(path).write_text(format_certificate(g, alpha))


def coloring(t: int, colors: Sequence[int]) -> EdgeColoring:
    return EdgeColoring(t, tuple(colors))
