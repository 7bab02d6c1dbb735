"""Edge-list documents and report rendering."""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .errors import GraphInputError
from .graph import DirectedGraph, build_graph


def parse_edge_list(text: str) -> DirectedGraph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` lines and blanks are skipped."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphInputError(f"line {lineno}: negative count in header")
            header = (a, b)
            continue
        if not (1 <= a <= header[0] and 1 <= b <= header[0]):
            raise GraphInputError(f"line {lineno}: vertex id out of range 1..{header[0]}")
        edges.append((a, b))
    if header is None:
        raise GraphInputError("missing header line 'n m'")
    if len(edges) != header[1]:
        raise GraphInputError(f"header announces {header[1]} edges, found {len(edges)}")
    return build_graph(header[0], edges)


def serialize_edge_list(g: DirectedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def graph_digest(g: DirectedGraph) -> str:
    return hashlib.sha256(serialize_edge_list(g).encode()).hexdigest()


def _jsonable(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        items = [_jsonable(v) for v in value]
        return sorted(items)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _text_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (set, frozenset, list, tuple)):
        items = _jsonable(value)
        if items and isinstance(items[0], list):
            return "\n".join(" ".join(str(x) for x in item) for item in items)
        return " ".join(str(x) for x in items)
    return str(value)


def render_report(
    command: str,
    result: Any,
    fmt: str = "text",
    graph: DirectedGraph | None = None,
    counts: dict[str, Any] | None = None,
    trace: list[dict] | None = None,
    wall_time: float | None = None,
) -> str:
    """Render a command result.

    Text output prints the result (sets as ascending ids, one edge or
    component per line), followed by ``#`` trace lines if a trace is given. JSON output carries the full report. The wall time is
    only included when given, so default reports are reproducible byte for byte.
    """
    if fmt == "text":
        out = _text_value(result)
        lines = [out] if out else []
        for i, rec in enumerate(trace or [], start=1):
            removed = ", ".join(f"{a} {b}" for a, b in rec["removed"]) or "-"
            lines.append(
                f"# step {i}: added {rec['added'][0]} {rec['added'][1]}; removed {removed}; "
                f"tsccs {rec['tsccs_before']} -> {rec['tsccs_after']}"
            )
        return "".join(line + "\n" for line in lines)
    doc: dict[str, Any] = {"command": command, "result": _jsonable(result)}
    if graph is not None:
        doc["input_sha256"] = graph_digest(graph)
    if counts is not None:
        doc["counts"] = _jsonable(counts)
    if trace is not None:
        doc["trace"] = _jsonable(trace)
    if wall_time is not None:
        doc["wall_time"] = round(wall_time, 6)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
