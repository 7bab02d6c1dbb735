"""2-vertex-twinless-connected components.

The search recursively shrinks the vertex set. A graph that is not
2-vertex-connected is cut along a dominator tree (a vertex together with its
dominator-tree children). A graph that is 2-vertex-connected but has a twinless
articulation point ``v`` is cut into the TSCCs of ``G[C + v]`` for every TSCC
``C`` of ``G - v``. Sets that are themselves 2-vertex-twinless-connected are
emitted and the union of all emitted sets is reduced to its maximal members.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from .cuts import twinless_articulation_points
from .errors import InvariantViolation, PreconditionError
from .graph import DirectedGraph, induced_subgraph, remove_vertex, reverse
from .strong import dominator_tree, strong_articulation_points
from .tscc import is_twinless_strongly_connected, tsccs

log = logging.getLogger(__name__)

VertexSet = frozenset[int]


@dataclass(frozen=True)
class Vtcc2Report:
    components: tuple[VertexSet, ...]
    depth: int = 0
    subproblems: int = 0

    def as_set(self) -> frozenset[VertexSet]:
        return frozenset(self.components)


def is_two_vertex_twinless_connected(g: DirectedGraph) -> bool:
    if g.n < 3 or not is_twinless_strongly_connected(g):
        return False
    return not twinless_articulation_points(g).taps


def collect_and_dedup(candidates: Iterable[Iterable[int]]) -> Vtcc2Report:
    """Unique candidate sets, minus any set contained in another candidate."""
    unique = {frozenset(c) for c in candidates}
    kept = [c for c in unique if not any(c < other for other in unique)]
    return Vtcc2Report(tuple(sorted(kept, key=lambda c: sorted(c))))


def _split(g: DirectedGraph, vertices: VertexSet) -> list[VertexSet]:
    """Children of one subproblem (vertex ids of ``g``); empty once it is solved."""
    cut = induced_subgraph(g, vertices)
    back = cut.labels
    # local ids, so that labels of further subgraphs refer to h
    h = DirectedGraph(cut.n, cut.edges)

    def lift(ids: Iterable[int]) -> VertexSet:
        return frozenset(back[v - 1] for v in ids)

    if not is_twinless_strongly_connected(h):
        return [lift(c) for c in tsccs(h).members if len(c) >= 3]

    saps = strong_articulation_points(h)
    if saps:
        non_saps = [v for v in h.vertices() if v not in saps]
        pivot = non_saps[0] if non_saps else 1
        forward = dominator_tree(h, pivot)
        backward = dominator_tree(reverse(h), pivot)
        # ties go to the forward flowgraph
        dt = forward if len(forward.nontrivial()) >= len(backward.nontrivial()) else backward
        parts = []
        for w in h.vertices():
            if len(dt.children[w]) < 2:
                continue
            block = (w, *dt.children[w])
            sub = induced_subgraph(h, block)
            if is_twinless_strongly_connected(sub):
                parts.append(lift(block))
            else:
                parts.extend(lift(sub.labels[v - 1] for v in c) for c in tsccs(sub).members if len(c) >= 3)
        return parts

    v = min(twinless_articulation_points(h).taps)
    hv = remove_vertex(h, v)
    parts = []
    for c in tsccs(hv).members:
        block = [hv.labels[x - 1] for x in c] + [v]
        sub = induced_subgraph(h, block)
        parts.extend(lift(sub.labels[x - 1] for x in cc) for cc in tsccs(sub).members if len(cc) >= 3)
    return parts


def two_vertex_twinless_components(g: DirectedGraph) -> Vtcc2Report:
    """Maximal vertex sets (at least 3 vertices) inducing 2-vertex-twinless-connected subgraphs.

    Returned sets use ``g``'s labels.
    """
    if not is_twinless_strongly_connected(g):
        raise PreconditionError("graph is not twinless strongly connected")
    emitted: list[VertexSet] = []
    stack = [(frozenset(g.vertices()), 0)] if g.n >= 3 else []
    depth = subproblems = 0
    while stack:
        vertices, level = stack.pop()
        subproblems += 1
        depth = max(depth, level)
        h = induced_subgraph(g, vertices)
        if is_two_vertex_twinless_connected(h):
            emitted.append(vertices)
            continue
        for part in _split(g, vertices):
            if not part < vertices:
                raise InvariantViolation(f"subproblem did not shrink: {sorted(part)}")
            if len(part) >= 3:
                stack.append((part, level + 1))

    report = collect_and_dedup(emitted)
    kept = []
    for c in report.components:
        if _extendable(g, c):
            log.warning("dropping non-maximal component %s", sorted(c))
        else:
            kept.append(c)
    return Vtcc2Report(
        tuple(sorted((frozenset(g.labels[v - 1] for v in c) for c in kept), key=sorted)),
        depth=depth,
        subproblems=subproblems,
    )


def _extendable(g: DirectedGraph, component: VertexSet) -> bool:
    return any(
        is_two_vertex_twinless_connected(induced_subgraph(g, component | {y}))
        for y in g.vertices()
        if y not in component
    )
