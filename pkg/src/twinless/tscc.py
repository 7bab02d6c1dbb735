"""Twinless strong connectivity and the twinless strongly connected components.

A digraph is twinless strongly connected exactly when it is strongly connected
and its underlying undirected graph is 2-edge-connected. Inside one SCC the
TSCCs are the 2-edge-connected classes of the underlying graph, and the
underlying bridges (always antiparallel pairs) form a tree over them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvariantViolation, PreconditionError
from .graph import ComponentLabeling, DirectedGraph, Edge, spanning_subgraph, underlying_graph
from .strong import is_strongly_connected, sccs
from .undirected import bridges_and_2ecc, is_two_edge_connected


def is_twinless_strongly_connected(g: DirectedGraph) -> bool:
    if g.n <= 1:
        return True
    return is_strongly_connected(g) and is_two_edge_connected(underlying_graph(g))


def tsccs(g: DirectedGraph) -> ComponentLabeling:
    scc = sccs(g).label
    inner = spanning_subgraph(g, [(u, v) for u, v in g.edges if scc[u] == scc[v]])
    return bridges_and_2ecc(underlying_graph(inner)).two_ecc


@dataclass(frozen=True)
class TreeEdge:
    """Adjacency between two TSCCs, realized by one antiparallel pair."""

    ends: tuple[int, int]
    arcs: tuple[Edge, Edge]

    def arc_from(self, labels: ComponentLabeling, component: int) -> Edge:
        """The arc of the pair whose tail lies in ``component``."""
        a, b = self.arcs
        return a if labels.label[a[0]] == component else b


@dataclass(frozen=True)
class TsccCondensation:
    labels: ComponentLabeling
    tree_edges: tuple[TreeEdge, ...]
    per_scc_trees: dict[int, tuple[TreeEdge, ...]] = field(hash=False)

    @cached_property
    def adjacency(self) -> list[list[tuple[int, TreeEdge]]]:
        adj: list[list[tuple[int, TreeEdge]]] = [[] for _ in range(self.labels.count)]
        for te in self.tree_edges:
            a, b = te.ends
            adj[a].append((b, te))
            adj[b].append((a, te))
        return adj

    @cached_property
    def arc_lookup(self) -> dict[Edge, TreeEdge]:
        return {arc: te for te in self.tree_edges for arc in te.arcs}


def tscc_condensation(g: DirectedGraph) -> TsccCondensation:
    """TSCC supervertices of a strongly connected graph and the tree joining them."""
    if not is_strongly_connected(g):
        raise PreconditionError("TSCC condensation needs a strongly connected graph")
    u = underlying_graph(g)
    report = bridges_and_2ecc(u)
    labels = report.two_ecc
    tree = []
    for ue in u.uedges:
        if ue not in report.bridges:
            continue
        arcs = u.origin[ue]
        if len(arcs) != 2:
            raise InvariantViolation(f"underlying bridge {ue} is not an antiparallel pair")
        a, b = ue
        tree.append(TreeEdge((labels.label[a], labels.label[b]), ((a, b), (b, a))))
    if len(tree) != labels.count - 1:
        raise InvariantViolation("TSCC condensation is not a tree")
    tree_edges = tuple(tree)
    return TsccCondensation(labels, tree_edges, {0: tree_edges})


def tscc_tree_path(cond: TsccCondensation, a: int, b: int) -> list[TreeEdge]:
    """Tree edges between the TSCC of ``a`` and that of ``b``, starting at ``a``'s side."""
    src, dst = cond.labels.label[a], cond.labels.label[b]
    if src == dst:
        return []
    prev: dict[int, tuple[int, TreeEdge]] = {}
    seen = {src}
    queue = deque([src])
    while queue:
        c = queue.popleft()
        if c == dst:
            break
        for d, te in cond.adjacency[c]:
            if d not in seen:
                seen.add(d)
                prev[d] = (c, te)
                queue.append(d)
    if dst not in seen:
        raise PreconditionError(f"vertices {a} and {b} lie in different SCCs")
    path = []
    c = dst
    while c != src:
        c, te = prev[c]
        path.append(te)
    path.reverse()
    return path
