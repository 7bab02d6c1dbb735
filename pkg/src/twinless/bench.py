"""Benchmark harness: time every algorithm on a list of cases.

A suite file has one case per line. A case is either an edge-list path
(relative to the suite file), ``fixture NAME``, or a generator spec such as
``random-sc 1000 5000 7`` (the same words as the ``gen`` subcommand, with the
seed last). Blank lines and ``#`` comments are skipped.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import fixtures
from .cuts import twinless_articulation_points, twinless_bridges_basic, twinless_bridges_sparse
from .errors import GraphInputError, PreconditionError
from .generators import cycle, random_sc, random_tsc
from .graph import DirectedGraph
from .io import parse_edge_list
from .mtscss import mtscss_2approx, mtscss_3approx, mtscss_repair, mtscss_repair_fast
from .strong import sccs, strong_articulation_points, strong_bridges
from .tscc import tsccs

# each returns the size of its answer (components, cut elements or edges)
ALGORITHMS: dict[str, Callable[[DirectedGraph], int]] = {
    "scc": lambda g: sccs(g).count,
    "tscc": lambda g: tsccs(g).count,
    "sap": lambda g: len(strong_articulation_points(g)),
    "sbridge": lambda g: len(strong_bridges(g)),
    "tap": lambda g: len(twinless_articulation_points(g).taps),
    "tbridge": lambda g: len(twinless_bridges_basic(g).tbridges),
    "tbridge-sparse": lambda g: len(twinless_bridges_sparse(g).tbridges),
    "3approx": lambda g: mtscss_3approx(g).size,
    "2approx": lambda g: mtscss_2approx(g).size,
    "repair": lambda g: mtscss_repair(g).size,
    "repair-fast": lambda g: mtscss_repair_fast(g).size,
}


@dataclass(frozen=True)
class BenchRow:
    case: str
    n: int
    m: int
    algorithm: str
    size: int | None
    seconds: float
    note: str = ""


def load_case(spec: str, base: Path | None = None) -> DirectedGraph:
    words = spec.split()
    try:
        if words[0] == "fixture" and len(words) == 2:
            return fixtures.load(words[1])
        if words[0] == "cycle" and len(words) == 2:
            return cycle(int(words[1]))
        if words[0] in ("random-sc", "random-tsc") and len(words) == 4:
            make = random_sc if words[0] == "random-sc" else random_tsc
            return make(int(words[1]), int(words[2]), int(words[3]))
    except (KeyError, ValueError) as exc:
        raise GraphInputError(f"bad case {spec!r}: {exc}") from None
    path = Path(spec)
    if base is not None and not path.is_absolute():
        path = base / path
    try:
        return parse_edge_list(path.read_text())
    except OSError as exc:
        raise GraphInputError(f"bad case {spec!r}: {exc}") from None


def read_suite(path: str | Path) -> list[str]:
    lines = Path(path).read_text().splitlines()
    return [s for s in (line.strip() for line in lines) if s and not s.startswith("#")]


def _run_case(args: tuple[str, Path | None, tuple[str, ...]]) -> list[BenchRow]:
    spec, base, algos = args
    g = load_case(spec, base)
    rows = []
    for name in algos:
        start = time.perf_counter()
        try:
            size, note = ALGORITHMS[name](g), ""
        except PreconditionError as exc:
            size, note = None, str(exc)
        rows.append(BenchRow(spec, g.n, g.m, name, size, time.perf_counter() - start, note))
    return rows


def run_suite(path: str | Path, algorithms: list[str] | None = None, jobs: int = 1) -> list[BenchRow]:
    """Run every algorithm on every case; rows come back in suite order whatever ``jobs`` is."""
    algos = tuple(algorithms or ALGORITHMS)
    unknown = [a for a in algos if a not in ALGORITHMS]
    if unknown:
        raise GraphInputError(f"unknown algorithm(s): {', '.join(unknown)}")
    base = Path(path).parent
    tasks = [(spec, base, algos) for spec in read_suite(path)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case, tasks))
    else:
        results = [_run_case(t) for t in tasks]
    return [row for rows in results for row in rows]


def format_table(rows: list[BenchRow]) -> str:
    header = ("case", "n", "m", "algorithm", "size", "seconds")
    body = [
        (r.case, str(r.n), str(r.m), r.algorithm, "-" if r.size is None else str(r.size), f"{r.seconds:.4f}")
        for r in rows
    ]
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in [header, *body]]
    return "\n".join(lines) + "\n"
