"""Approximations for the minimum twinless strongly connected spanning subgraph.

All four algorithms start from a strongly connected spanning subgraph and merge
its TSCCs until one remains:

* ``mtscss_3approx`` only adds cross-TSCC edges.
* ``mtscss_2approx`` adds an edge ``(v, w)`` and drops, for every tree edge the
  closing path ``w -> v`` crosses, the twin arc pointing back towards ``w``.
  The subgraph never grows past its two-branching start (``<= 2n - 2`` edges).
* ``mtscss_repair`` runs the same loop from a caller-supplied strongly
  connected baseline and never grows it.
* ``mtscss_repair_fast`` does the same in one scan, tracking merged TSCCs in a
  disjoint-set forest and a contracted copy of the TSCC tree.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Iterable
from dataclasses import asdict, dataclass, field

from .errors import InvariantViolation, PreconditionError
from .graph import DirectedGraph, Edge, reverse, spanning_subgraph
from .strong import is_strongly_connected
from .tscc import TreeEdge, TsccCondensation, is_twinless_strongly_connected, tscc_condensation, tsccs

Baseline = Callable[[DirectedGraph], Iterable[Edge]]


@dataclass(frozen=True)
class IterationRecord:
    added: Edge
    removed: tuple[Edge, ...]
    tsccs_before: int
    tsccs_after: int


@dataclass(frozen=True)
class SpanningSubgraphResult:
    edges: frozenset[Edge]
    algorithm: str
    trace: tuple[IterationRecord, ...] = ()
    bound_name: str = ""
    bound: int = 0
    bound_held: bool = True
    baseline_size: int | None = None

    @property
    def size(self) -> int:
        return len(self.edges)

    def trace_records(self) -> list[dict]:
        return [asdict(r) for r in self.trace]


def _require_tsc(g: DirectedGraph) -> None:
    if not is_twinless_strongly_connected(g):
        raise PreconditionError("graph is not twinless strongly connected")


def _bfs_tree_edges(adj, root: int) -> list[Edge]:
    seen = {root}
    queue = deque([root])
    edges = []
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                edges.append((v, w))
                queue.append(w)
    return edges


def two_trees_subgraph(g: DirectedGraph, root: int = 1) -> frozenset[Edge]:
    """An out-branching and an in-branching rooted at ``root`` (at most ``2n - 2`` edges)."""
    if not is_strongly_connected(g):
        raise PreconditionError("graph is not strongly connected")
    out_tree = _bfs_tree_edges(g.out_adj, root)
    in_tree = [(j, i) for i, j in _bfs_tree_edges(reverse(g).out_adj, root)]
    return frozenset(out_tree) | frozenset(in_tree)


def _first_crossing_edge(g: DirectedGraph, current: set[Edge], label) -> Edge | None:
    for v, w in g.edges:
        if label[v] != label[w] and (v, w) not in current:
            return (v, w)
    return None


def mtscss_3approx(g: DirectedGraph, root: int = 1) -> SpanningSubgraphResult:
    _require_tsc(g)
    current = set(two_trees_subgraph(g, root))
    trace = []
    labels = tsccs(spanning_subgraph(g, current))
    while labels.count > 1:
        e = _first_crossing_edge(g, current, labels.label)
        if e is None:
            raise InvariantViolation("no edge joins two TSCCs of the partial subgraph")
        current.add(e)
        after = tsccs(spanning_subgraph(g, current))
        if after.count >= labels.count:
            raise InvariantViolation(f"adding {e} did not merge TSCCs")
        trace.append(IterationRecord(e, (), labels.count, after.count))
        labels = after
    bound = 3 * g.n - 3
    return SpanningSubgraphResult(
        frozenset(current), "3approx", tuple(trace), "3n-3", bound, len(current) <= max(bound, 0)
    )


def shortest_path(g: DirectedGraph, source: int, target: int) -> list[Edge]:
    """Breadth-first path from ``source`` to ``target`` as a list of arcs."""
    prev = {source: 0}
    queue = deque([source])
    while queue and target not in prev:
        v = queue.popleft()
        for w in g.out_adj[v]:
            if w not in prev:
                prev[w] = v
                queue.append(w)
    if target not in prev:
        raise InvariantViolation(f"no path from {source} to {target}")
    path = []
    v = target
    while v != source:
        path.append((prev[v], v))
        v = prev[v]
    path.reverse()
    return path


def compute_S(cond: TsccCondensation, path: list[Edge], v: int, w: int) -> frozenset[Edge]:
    """Twins of the path arcs that realize TSCC tree edges.

    ``path`` runs from ``w`` to ``v`` in the current subgraph; ``cond`` is that
    subgraph's condensation before ``(v, w)`` is inserted.
    """
    if cond.labels.same(v, w):
        raise PreconditionError(f"{v} and {w} already share a TSCC")
    label = cond.labels.label
    s = set()
    for i, j in path:
        if label[i] != label[j]:
            if (i, j) not in cond.arc_lookup:
                raise InvariantViolation(f"path arc {(i, j)} crosses TSCCs but is not a tree edge")
            s.add((j, i))
    if not s:
        raise InvariantViolation("closing path crosses no TSCC tree edge")
    return frozenset(s)


def _merge_loop(g: DirectedGraph, current: set[Edge]) -> list[IterationRecord]:
    trace = []
    cond = tscc_condensation(spanning_subgraph(g, current))
    while cond.labels.count > 1:
        e = _first_crossing_edge(g, current, cond.labels.label)
        if e is None:
            raise InvariantViolation("no edge joins two TSCCs of the partial subgraph")
        v, w = e
        sub = spanning_subgraph(g, current)
        drop = compute_S(cond, shortest_path(sub, w, v), v, w)
        current.add(e)
        current.difference_update(drop)
        after_graph = spanning_subgraph(g, current)
        if not is_strongly_connected(after_graph):
            raise InvariantViolation(f"subgraph lost strong connectivity after inserting {e}")
        after = tscc_condensation(after_graph)
        if after.labels.count >= cond.labels.count:
            raise InvariantViolation(f"inserting {e} did not merge TSCCs")
        trace.append(IterationRecord(e, tuple(sorted(drop)), cond.labels.count, after.labels.count))
        cond = after
    return trace


def mtscss_2approx(g: DirectedGraph, root: int = 1) -> SpanningSubgraphResult:
    _require_tsc(g)
    current = set(two_trees_subgraph(g, root))
    trace = _merge_loop(g, current)
    bound = 2 * g.n - 2
    return SpanningSubgraphResult(
        frozenset(current), "2approx", tuple(trace), "2n-2", bound, len(current) <= max(bound, 0)
    )


def _baseline_edges(g: DirectedGraph, baseline: Baseline | None) -> set[Edge]:
    edges = set(two_trees_subgraph(g) if baseline is None else baseline(g))
    if not edges <= g.edge_set:
        raise PreconditionError("baseline returned edges outside the graph")
    if not is_strongly_connected(spanning_subgraph(g, edges)):
        raise PreconditionError("baseline subgraph is not strongly connected")
    return edges


def mtscss_repair(g: DirectedGraph, baseline: Baseline | None = None) -> SpanningSubgraphResult:
    """Turn a strongly connected spanning subgraph into a twinless one without growing it.

    ``baseline`` maps the graph to a strongly connected spanning edge set;
    the default is :func:`two_trees_subgraph`.
    """
    _require_tsc(g)
    current = _baseline_edges(g, baseline)
    start = len(current)
    trace = _merge_loop(g, current)
    return SpanningSubgraphResult(
        frozenset(current), "repair", tuple(trace), "baseline", start, len(current) <= start, start
    )


class DisjointSets:
    """Union-find with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.rank = [0] * (n + 1)
        self.unions = 0

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.unions += 1
        return ra


class ContractedTree:
    """The TSCC tree with merged supervertices contracted.

    Nodes are disjoint-set representatives. ``adj[x][y]`` is the antiparallel
    pair joining nodes ``x`` and ``y``.
    """

    def __init__(self, cond: TsccCondensation, sets: DisjointSets):
        self.adj: dict[int, dict[int, tuple[Edge, Edge]]] = {}
        for members in cond.labels.members:
            self.adj[sets.find(members[0])] = {}
        for te in cond.tree_edges:
            (a, b), pair = te.arcs[0], te.arcs
            x, y = sets.find(a), sets.find(b)
            self.adj[x][y] = pair
            self.adj[y][x] = pair

    def __len__(self) -> int:
        return len(self.adj)

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj.values()) // 2

    def path(self, src: int, dst: int) -> list[int]:
        prev = {src: src}
        queue = deque([src])
        while queue and dst not in prev:
            x = queue.popleft()
            for y in self.adj[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if dst not in prev:
            raise InvariantViolation(f"contracted tree has no path {src} -> {dst}")
        nodes = [dst]
        while nodes[-1] != src:
            nodes.append(prev[nodes[-1]])
        nodes.reverse()
        return nodes

    def contract(self, nodes: list[int], keep: int) -> None:
        group = set(nodes)
        merged: dict[int, tuple[Edge, Edge]] = {}
        for x in nodes:
            for y, pair in self.adj.pop(x).items():
                if y not in group:
                    merged[y] = pair
                    del self.adj[y][x]
                    self.adj[y][keep] = pair
        self.adj[keep] = merged


def mtscss_repair_fast(g: DirectedGraph, baseline: Baseline | None = None) -> SpanningSubgraphResult:
    """Single-scan variant of :func:`mtscss_repair`."""
    _require_tsc(g)
    current = _baseline_edges(g, baseline)
    start = len(current)
    cond = tscc_condensation(spanning_subgraph(g, current))
    sets = DisjointSets(g.n)
    for members in cond.labels.members:
        for v in members[1:]:
            sets.union(members[0], v)
    tree = ContractedTree(cond, sets)
    trace = []
    candidates = [e for e in g.edges if e not in current]
    for v, w in candidates:
        if len(tree) == 1:
            break
        cv, cw = sets.find(v), sets.find(w)
        if cv == cw:
            continue
        nodes = tree.path(cv, cw)
        before = len(tree)
        # walking the tree from v's side to w's side, drop each pair's arc that
        # points towards w; the closing cycle w -> v keeps the other one
        removed = []
        for x, y in zip(nodes, nodes[1:]):
            for arc in tree.adj[x][y]:
                if sets.find(arc[0]) == x and arc in current:
                    current.discard(arc)
                    removed.append(arc)
        current.add((v, w))
        keep = cv
        for x in nodes[1:]:
            keep = sets.union(keep, x)
        tree.contract(nodes, keep)
        trace.append(IterationRecord((v, w), tuple(sorted(removed)), before, len(tree)))
    if len(tree) != 1:
        raise InvariantViolation("edge scan ended with several TSCCs left")
    return SpanningSubgraphResult(
        frozenset(current), "repair-fast", tuple(trace), "baseline", start, len(current) <= start, start
    )
