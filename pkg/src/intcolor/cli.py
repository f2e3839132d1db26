"""Command-line entry point: ``intcolor <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from fractions import Fraction
from pathlib import Path

from intcolor import constructions, kernel, transforms
from intcolor.bounds import BOUNDS_HEADER, bound_rows, evaluate_bounds
from intcolor.coloring import EdgeColoring, format_certificate, read_certificate, verify
from intcolor.multigraph import GraphFormatError, MultiGraph, format_graph, read_graph
from intcolor.scan import ScanConfig, scan
from intcolor.solver import MODES, RESULT_HEADER, result_row, solve

log = logging.getLogger("intcolor")


def _emit(g: MultiGraph, alpha: EdgeColoring | None, out: str | None) -> None:
    """Graph (and certificate) to ``OUT.graph`` / ``OUT.cert``, or the graph to stdout."""
    if out is None:
        sys.stdout.write(format_graph(g))
        if alpha is not None:
            log.info("certificate not written; pass --out to save it")
        return
    Path(out + ".graph").write_text(format_graph(g))
    if alpha is not None:
        Path(out + ".cert").write_text(format_certificate(g, alpha))


def _writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    result = solve(g, args.mode, cutoff=args.tmax, time_budget=args.time_budget)
    w = _writer()
    w.writerow(RESULT_HEADER)
    w.writerow(result_row(args.id or Path(args.graph).stem, g, result))
    if args.certificate and result.feasible:
        t = result.max_colors
        Path(args.certificate).write_text(format_certificate(g, result.certificates[t]))
    return 0


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    alpha = read_certificate(args.certificate, g)
    verdict = verify(g, alpha, args.mode)
    if verdict:
        print(f"valid {args.mode} {alpha.t}-coloring")
        return 0
    print(f"invalid: {verdict.condition} {' '.join(map(str, verdict.witness))}".rstrip())
    return 1


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def cmd_bounds(args) -> int:
    g = read_graph(args.graph)
    params = None
    if (args.a is None) != (args.b is None):
        raise SystemExit("--a and --b go together")
    if args.a is not None:
        params = (args.a, args.b)
    report = evaluate_bounds(g, sparse_params=params)
    w = _writer()
    w.writerow(BOUNDS_HEADER)
    w.writerows(bound_rows(args.id or Path(args.graph).stem, report))
    return 0


def cmd_construct(args) -> int:
    if args.family == "gnr":
        out = constructions.build_gnr(args.n, args.r)
    elif args.family == "cycle":
        out = constructions.build_cycle_cyclic(args.n)
    elif args.family == "kab":
        out = constructions.build_complete_bipartite(args.a, args.b)
    else:
        out = constructions.build_hypercube(args.n)
    _emit(out.graph, out.coloring, args.out)
    if out.claimed_spectrum is not None:
        spec = ",".join(map(str, out.claimed_spectrum))
        print(f"claimed interval spectrum: {spec}", file=sys.stderr)
    if out.note:
        print(out.note, file=sys.stderr)
    return 0


def cmd_transform(args) -> int:
    g = read_graph(args.graph)
    if args.op == "identify":
        _emit(transforms.identify_vertices(g, args.u, args.v), None, args.out)
        return 0
    alpha = read_certificate(args.certificate, g)
    if args.op == "rotate":
        _emit(g, transforms.rotate_cyclic(g, alpha, args.k), args.out)
    elif args.op == "split":
        res = transforms.split_graph(g, alpha, args.boundary)
        for u, (lo, hi) in sorted(res.split_map.items()):
            print(f"split {u} -> {lo} {hi}", file=sys.stderr)
        _emit(res.graph, res.coloring, args.out)
    elif args.op == "double":
        _emit(*transforms.double_bipartite(g, alpha), args.out)
    else:
        h, beta, _ = transforms.drop_full_color(g, alpha, args.color)
        _emit(h, beta, args.out)
    return 0


def cmd_scan(args) -> int:
    config = ScanConfig(
        max_vertices=args.max_n,
        max_degree=args.max_degree,
        triangle_free_only=args.triangle_free,
        mode=args.mode,
        graph6_path=args.graph6,
        output_path=args.out,
        time_budget=args.time_budget,
    )
    report = scan(config)
    for key, value in report.summary():
        print(f"{key}: {value}")
    return 1 if report.theorem_violations else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="intcolor", description="Interval and cyclic interval edge colorings.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="feasible numbers of colors for a graph file")
    s.add_argument("--mode", choices=MODES, required=True)
    s.add_argument("--tmax", type=int, help="largest t to try (default: best proven bound, at most m)")
    s.add_argument("--time-budget", type=float, help="seconds for the whole run")
    s.add_argument("--certificate", help="write the coloring with the most colors here")
    s.add_argument("--id", help="graph id for the report row (default: file stem)")
    s.add_argument("graph")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a certificate against a graph")
    s.add_argument("--mode", choices=MODES, required=True)
    s.add_argument("graph")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bounds", help="CSV report of every bound for a graph file")
    s.add_argument("--a", type=_fraction, help="density slope for the sparse triangle-free bound")
    s.add_argument("--b", type=_fraction, help="density offset for the sparse triangle-free bound")
    s.add_argument("--id")
    s.add_argument("graph")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("construct", help="build an explicit family member")
    s.add_argument("--out", help="write OUT.graph and OUT.cert instead of printing the graph")
    fam = s.add_subparsers(dest="family", required=True)
    f = fam.add_parser("gnr")
    f.add_argument("n", type=int)
    f.add_argument("r", type=int)
    f = fam.add_parser("cycle")
    f.add_argument("n", type=int)
    f = fam.add_parser("kab")
    f.add_argument("a", type=int)
    f.add_argument("b", type=int)
    f = fam.add_parser("cube")
    f.add_argument("n", type=int)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("transform", help="apply a certificate-preserving transform")
    s.add_argument("--out", help="write OUT.graph and OUT.cert instead of printing the graph")
    ops = s.add_subparsers(dest="op", required=True)
    o = ops.add_parser("rotate")
    o.add_argument("graph")
    o.add_argument("certificate")
    o.add_argument("k", type=int)
    o = ops.add_parser("split")
    o.add_argument("graph")
    o.add_argument("certificate")
    o.add_argument("--boundary", type=int, help="color to rotate to 1 (default: best)")
    o = ops.add_parser("double")
    o.add_argument("graph")
    o.add_argument("certificate")
    o = ops.add_parser("dropcolor")
    o.add_argument("graph")
    o.add_argument("certificate")
    o.add_argument("color", type=int)
    o = ops.add_parser("identify")
    o.add_argument("graph")
    o.add_argument("u", type=int)
    o.add_argument("v", type=int)
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("scan", help="exhaustive consistency scan over small graphs")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--triangle-free", action="store_true")
    s.add_argument("--max-degree", type=int)
    s.add_argument("--mode", choices=("interval", "cyclic", "both"), default="both")
    s.add_argument("--graph6", help="read graphs from this file instead of generating them")
    s.add_argument("--time-budget", type=float, help="seconds per graph and mode")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    log.debug("search backend: %s", kernel.BACKEND)
    try:
        return args.func(args)
    except (GraphFormatError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
