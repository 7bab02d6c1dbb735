"""Command-line interface: ``twinless <command> [--input FILE] [--format text|json]``.

Exit codes: 0 on success, 2 on malformed input, 3 when the graph does not meet
a command's precondition (or an oracle budget).
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from typing import Any

from . import bench, fixtures
from .cuts import is_two_edge_twinless_connected, twinless_articulation_points, twinless_bridges_basic, twinless_bridges_sparse
from .errors import GraphInputError, OracleBudgetExceeded, PreconditionError
from .generators import cycle, random_sc, random_tsc
from .graph import DirectedGraph
from .io import parse_edge_list, render_report, serialize_edge_list
from .mtscss import mtscss_2approx, mtscss_3approx, mtscss_repair, mtscss_repair_fast
from .oracle import OracleBudget, oracle_2vcc
from .strong import is_strongly_connected, is_two_vertex_connected, sccs, strong_articulation_points, strong_bridges
from .tscc import is_twinless_strongly_connected, tsccs
from .vtcc import is_two_vertex_twinless_connected, two_vertex_twinless_components

EXIT_INPUT = 2
EXIT_PRECONDITION = 3

CHECKS = {
    "sc": is_strongly_connected,
    "tsc": is_twinless_strongly_connected,
    "2vc": is_two_vertex_connected,
    "2vtc": is_two_vertex_twinless_connected,
    "2etc": is_two_edge_twinless_connected,
}

MTSCSS = {
    "3approx": mtscss_3approx,
    "2approx": mtscss_2approx,
    "repair": mtscss_repair,
    "repair-fast": mtscss_repair_fast,
}


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", metavar="FILE", help="edge-list file (default: standard input)")
    common.add_argument("--format", "-f", choices=("text", "json"), default="text")
    common.add_argument("--timing", action="store_true", help="add the wall time to JSON reports")

    parser = argparse.ArgumentParser(prog="twinless", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide a connectivity property")
    p.add_argument("property", choices=tuple(CHECKS))
    for name, text in (
        ("scc", "strongly connected components"),
        ("tscc", "twinless strongly connected components"),
        ("sap", "strong articulation points"),
        ("sbridge", "strong bridges"),
        ("tap", "twinless articulation points"),
        ("2vtcc", "2-vertex-twinless-connected components"),
    ):
        sub.add_parser(name, parents=[common], help=text)
    p = sub.add_parser("2vcc-oracle", parents=[common], help="2-vertex-connected components by brute force")
    p.add_argument("--max-n", type=int, default=12, help="refuse larger graphs (the search visits 2^n subsets)")
    p = sub.add_parser("tbridge", parents=[common], help="twinless bridges")
    p.add_argument("--sparse", action="store_true", help="test only edges of the sparse certificate")
    p = sub.add_parser("mtscss", parents=[common], help="small twinless strongly connected spanning subgraph")
    p.add_argument("--algo", choices=tuple(MTSCSS), default="2approx")
    p.add_argument("--trace", action="store_true", help="include the merge log")

    gen = sub.add_parser("gen", help="write a generated graph as an edge list")
    kinds = gen.add_subparsers(dest="kind", required=True)
    kinds.add_parser("cycle").add_argument("n", type=int)
    for kind in ("random-sc", "random-tsc"):
        p = kinds.add_parser(kind)
        p.add_argument("n", type=int)
        p.add_argument("m", type=int)
        p.add_argument("--seed", type=_seed, required=True)

    p = sub.add_parser("bench", help="time the algorithms on a suite of cases")
    p.add_argument("--suite", required=True, metavar="FILE")
    p.add_argument("--algo", action="append", choices=tuple(bench.ALGORITHMS), help="repeatable; default all")
    p.add_argument("--jobs", type=int, default=1, help="cases run in parallel")

    p = sub.add_parser("fixtures", help="list the example graphs or print one")
    p.add_argument("name", nargs="?", choices=fixtures.NAMES)
    return parser


def _read_graph(path: str | None) -> DirectedGraph:
    if path is None:
        return parse_edge_list(sys.stdin.read())
    try:
        with open(path) as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None


def _components(labels) -> list[list[int]]:
    return sorted(list(c) for c in labels.members)


def _analyze(args: argparse.Namespace, g: DirectedGraph) -> tuple[Any, dict | None, list | None]:
    """Result, counts and trace of a graph command."""
    cmd = args.command
    if cmd == "check":
        return CHECKS[args.property](g), None, None
    if cmd in ("scc", "tscc"):
        comps = _components(sccs(g) if cmd == "scc" else tsccs(g))
        return comps, {"components": len(comps)}, None
    if cmd == "2vcc-oracle":
        # strong connectivity needs no orientation enumeration, so only n is capped
        budget = OracleBudget(max_n=args.max_n, max_antiparallel_pairs=g.m)
        comps = sorted(sorted(c) for c in oracle_2vcc(g, budget))
        return comps, {"components": len(comps)}, None
    if cmd == "sap":
        found = strong_articulation_points(g)
        return found, {"saps": len(found)}, None
    if cmd == "sbridge":
        found = strong_bridges(g)
        return found, {"bridges": len(found)}, None
    if cmd == "tap":
        report = twinless_articulation_points(g)
        return report.taps, {"taps": len(report.taps), **report.candidate_counts}, None
    if cmd == "tbridge":
        report = (twinless_bridges_sparse if args.sparse else twinless_bridges_basic)(g)
        return report.tbridges, {"tbridges": len(report.tbridges), **report.candidate_counts}, None
    if cmd == "mtscss":
        res = MTSCSS[args.algo](g)
        counts = {
            "algorithm": res.algorithm,
            "size": res.size,
            "bound_name": res.bound_name,
            "bound": res.bound,
            "bound_held": res.bound_held,
            "iterations": len(res.trace),
        }
        return sorted(res.edges), counts, res.trace_records() if args.trace else None
    if cmd == "2vtcc":
        report = two_vertex_twinless_components(g)
        comps = [sorted(c) for c in report.components]
        return comps, {"components": len(comps), "depth": report.depth, "subproblems": report.subproblems}, None
    raise AssertionError(cmd)


def _generate(args: argparse.Namespace) -> DirectedGraph:
    if args.kind == "cycle":
        return cycle(args.n)
    make = random_sc if args.kind == "random-sc" else random_tsc
    if args.m < 0:
        raise GraphInputError("edge count must be non-negative")
    return make(args.n, args.m, args.seed)


def run(argv: list[str] | None = None) -> str:
    """Execute one command and return its standard output; errors propagate."""
    args = build_parser().parse_args(argv)
    if args.command == "gen":
        return serialize_edge_list(_generate(args))
    if args.command == "fixtures":
        return fixtures.fixture_text(args.name) if args.name else "\n".join(fixtures.NAMES) + "\n"
    if args.command == "bench":
        try:
            rows = bench.run_suite(args.suite, args.algo, args.jobs)
        except OSError as exc:
            raise GraphInputError(f"cannot read suite {args.suite}: {exc.strerror}") from None
        return bench.format_table(rows)

    g = _read_graph(args.input)
    start = time.perf_counter()
    result, counts, trace = _analyze(args, g)
    elapsed = time.perf_counter() - start if args.timing else None
    return render_report(args.command, result, args.format, graph=g, counts=counts, trace=trace, wall_time=elapsed)


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="twinless: %(message)s")
    try:
        out = run(argv)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, OracleBudgetExceeded) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
