"""Directed graphs, their underlying undirected graphs, and component labelings.

Vertices are the integers ``1..n``. Index ``0`` of every per-vertex list is
unused so that vertex ids can index directly.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import GraphInputError

log = logging.getLogger(__name__)

Edge = tuple[int, int]


class DirectedGraph:
    """Simple digraph on ``1..n`` with stable edge ids.

    Edge ``i`` is ``edges[i]``. ``labels[v - 1]`` names vertex ``v`` in the graph
    this one was cut from; graphs built from an edge list use the identity.
    Treat instances as immutable.
    """

    def __init__(self, n: int, edges: Sequence[Edge], labels: Sequence[int] | None = None):
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(edges)
        self.labels: tuple[int, ...] = tuple(labels) if labels is not None else tuple(range(1, n + 1))
        out_adj: list[list[int]] = [[] for _ in range(n + 1)]
        in_adj: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in self.edges:
            out_adj[u].append(v)
            in_adj[v].append(u)
        self.out_adj = out_adj
        self.in_adj = in_adj

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_index

    def label_of(self, v: int) -> int:
        return self.labels[v - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edge_set == other.edge_set

    def __hash__(self) -> int:
        return hash((self.n, self.edge_set))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[Edge]) -> DirectedGraph:
    """Validate and normalize an edge list into a :class:`DirectedGraph`.

    Self-loops are dropped and duplicate pairs collapse onto their first
    occurrence, which also fixes the edge ids.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    seen: set[Edge] = set()
    edges: list[Edge] = []
    loops = 0
    for k, (u, v) in enumerate(edge_list):
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphInputError(f"edge {k + 1} ({u}, {v}): vertex id out of range 1..{n}")
        if u == v:
            loops += 1
            continue
        if (u, v) in seen:
            continue
        seen.add((u, v))
        edges.append((u, v))
    if loops:
        log.warning("dropped %d self-loop(s)", loops)
    return DirectedGraph(n, edges)


def reverse(g: DirectedGraph) -> DirectedGraph:
    """The graph on the same vertices with every edge flipped."""
    return DirectedGraph(g.n, [(v, u) for u, v in g.edges], g.labels)


def induced_subgraph(g: DirectedGraph, vertices: Iterable[int]) -> DirectedGraph:
    """Subgraph induced by ``vertices``, relabeled densely in ascending order.

    The result's ``labels`` map back to the labels of ``g``.
    """
    keep = sorted(set(vertices))
    new_id = [0] * (g.n + 1)
    for i, v in enumerate(keep, start=1):
        new_id[v] = i
    edges = [(new_id[u], new_id[v]) for u, v in g.edges if new_id[u] and new_id[v]]
    return DirectedGraph(len(keep), edges, [g.labels[v - 1] for v in keep])


def remove_vertex(g: DirectedGraph, x: int) -> DirectedGraph:
    return induced_subgraph(g, (v for v in g.vertices() if v != x))


def remove_edge(g: DirectedGraph, edge: Edge) -> DirectedGraph:
    return DirectedGraph(g.n, [e for e in g.edges if e != edge], g.labels)


def spanning_subgraph(g: DirectedGraph, edges: Iterable[Edge]) -> DirectedGraph:
    """Keep all vertices of ``g`` and only the given edges, in ``g``'s edge order."""
    chosen = set(edges)
    missing = chosen - g.edge_set
    if missing:
        raise GraphInputError(f"edges not in graph: {sorted(missing)[:5]}")
    return DirectedGraph(g.n, [e for e in g.edges if e in chosen], g.labels)


class UnderlyingGraph:
    """Undirected simple graph obtained by forgetting edge directions.

    An antiparallel pair ``(u, v), (v, u)`` collapses onto one undirected edge
    whose ``origin`` lists both arcs. Undirected edges are stored as ``(a, b)``
    with ``a < b``; ``adj[v]`` holds ``(neighbor, uedge id)`` pairs.
    """

    def __init__(self, n: int, uedges: Sequence[Edge], origin: dict[Edge, tuple[Edge, ...]]):
        self.n = n
        self.uedges = tuple(uedges)
        self.origin = origin
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
        for i, (a, b) in enumerate(self.uedges):
            adj[a].append((b, i))
            adj[b].append((a, i))
        self.adj = adj

    @cached_property
    def uedge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.uedges)}

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(indptr, nbr, eid)`` arrays; neighbors of ``v`` sit in ``indptr[v]:indptr[v+1]``."""
        indptr = np.zeros(self.n + 2, dtype=np.int64)
        for v in range(1, self.n + 1):
            indptr[v + 1] = indptr[v] + len(self.adj[v])
        nbr = np.fromiter((w for v in range(self.n + 1) for w, _ in self.adj[v]), dtype=np.int64)
        eid = np.fromiter((i for v in range(self.n + 1) for _, i in self.adj[v]), dtype=np.int64)
        return indptr, nbr, eid

    def __repr__(self) -> str:
        return f"UnderlyingGraph(n={self.n}, uedges={len(self.uedges)})"


def uedge_of(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def underlying_graph(g: DirectedGraph) -> UnderlyingGraph:
    origin: dict[Edge, list[Edge]] = {}
    for u, v in g.edges:
        origin.setdefault(uedge_of(u, v), []).append((u, v))
    return UnderlyingGraph(g.n, list(origin), {k: tuple(arcs) for k, arcs in origin.items()})


@dataclass(frozen=True)
class ComponentLabeling:
    """Partition of ``1..n``; components are numbered by their smallest vertex."""

    label: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    @classmethod
    def from_labels(cls, raw: Sequence[int]) -> ComponentLabeling:
        """Canonicalize arbitrary per-vertex labels (``raw[0]`` is ignored)."""
        renumber: dict[int, int] = {}
        label = [-1] * len(raw)
        groups: list[list[int]] = []
        for v in range(1, len(raw)):
            c = renumber.get(raw[v])
            if c is None:
                c = renumber[raw[v]] = len(groups)
                groups.append([])
            label[v] = c
            groups[c].append(v)
        return cls(tuple(label), tuple(tuple(g) for g in groups))

    @property
    def n(self) -> int:
        return len(self.label) - 1

    @property
    def count(self) -> int:
        return len(self.members)

    def same(self, u: int, v: int) -> bool:
        return self.label[u] == self.label[v]

    def as_sets(self, labels: Sequence[int] | None = None) -> frozenset[frozenset[int]]:
        if labels is None:
            return frozenset(frozenset(c) for c in self.members)
        return frozenset(frozenset(labels[v - 1] for v in c) for c in self.members)
