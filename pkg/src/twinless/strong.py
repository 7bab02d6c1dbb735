"""Strongly connected components, dominator trees, strong articulation points and bridges."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import PreconditionError
from .graph import ComponentLabeling, DirectedGraph, Edge, reverse


def sccs(g: DirectedGraph) -> ComponentLabeling:
    """Tarjan's algorithm with an explicit stack."""
    n = g.n
    index = [0] * (n + 1)
    low = [0] * (n + 1)
    on_stack = [False] * (n + 1)
    comp = [0] * (n + 1)
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for s in range(1, n + 1):
        if index[s]:
            continue
        counter += 1
        index[s] = low[s] = counter
        stack.append(s)
        on_stack[s] = True
        work = [(s, iter(g.out_adj[s]))]
        while work:
            v, it = work[-1]
            for w in it:
                if not index[w]:
                    counter += 1
                    index[w] = low[w] = counter
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(g.out_adj[w])))
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                if low[v] == index[v]:
                    ncomp += 1
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp[w] = ncomp
                        if w == v:
                            break
    return ComponentLabeling.from_labels(comp)


def _reach(adj: Sequence[Sequence[int]], start: int, n: int, banned_vertex: int = 0,
           banned_edge: Edge | None = None) -> int:
    """Number of vertices reachable from ``start`` avoiding a vertex and an edge."""
    seen = [False] * (n + 1)
    seen[start] = True
    if banned_vertex:
        seen[banned_vertex] = True
    stack = [start]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w] and (v, w) != banned_edge:
                seen[w] = True
                count += 1
                stack.append(w)
    return count


def strongly_connected_without(g: DirectedGraph, vertex: int = 0, edge: Edge | None = None) -> bool:
    """Strong connectivity of ``g`` minus an optional vertex and an optional edge."""
    total = g.n - (1 if vertex else 0)
    if total <= 1:
        return True
    start = 2 if vertex == 1 else 1
    redge = (edge[1], edge[0]) if edge else None
    return (_reach(g.out_adj, start, g.n, vertex, edge) == total
            and _reach(g.in_adj, start, g.n, vertex, redge) == total)


def is_strongly_connected(g: DirectedGraph) -> bool:
    return strongly_connected_without(g)


def _require_sc(g: DirectedGraph) -> None:
    if not is_strongly_connected(g):
        raise PreconditionError("graph is not strongly connected")


@dataclass(frozen=True)
class DominatorTree:
    """Immediate dominators of a flowgraph; ``idom[root] == root``."""

    root: int
    idom: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]

    @cached_property
    def _intervals(self) -> tuple[list[int], list[int]]:
        pre = [0] * len(self.idom)
        post = [0] * len(self.idom)
        clock = 0
        stack = [(self.root, False)]
        while stack:
            v, done = stack.pop()
            clock += 1
            if done:
                post[v] = clock
                continue
            pre[v] = clock
            stack.append((v, True))
            stack.extend((c, False) for c in reversed(self.children[v]))
        return pre, post

    def dominates(self, a: int, b: int) -> bool:
        """Whether ``a`` dominates ``b`` (reflexive)."""
        pre, post = self._intervals
        return pre[a] <= pre[b] and post[b] <= post[a]

    def nontrivial(self) -> frozenset[int]:
        """Dominators other than the root and the dominated vertex itself."""
        return frozenset(v for v in range(1, len(self.idom)) if v != self.root and self.children[v])


def dominator_tree(g: DirectedGraph, root: int) -> DominatorTree:
    """Lengauer-Tarjan with path compression (the simple variant)."""
    n = g.n
    dfnum = [0] * (n + 1)
    vertex = [0] * (n + 1)
    parent = [0] * (n + 1)
    t = 0
    stack = [(root, 0)]
    while stack:
        v, p = stack.pop()
        if dfnum[v]:
            continue
        t += 1
        dfnum[v] = t
        vertex[t] = v
        parent[v] = p
        for w in reversed(g.out_adj[v]):
            if not dfnum[w]:
                stack.append((w, v))
    if t != n:
        raise PreconditionError(f"{n - t} vertices unreachable from root {root}")

    semi = dfnum[:]
    ancestor = [0] * (n + 1)
    label = list(range(n + 1))
    idom = [0] * (n + 1)
    bucket: list[list[int]] = [[] for _ in range(n + 1)]

    def evaluate(v: int) -> int:
        if not ancestor[v]:
            return v
        path = []
        x = v
        while ancestor[ancestor[x]]:
            path.append(x)
            x = ancestor[x]
        for x in reversed(path):
            a = ancestor[x]
            if semi[label[a]] < semi[label[x]]:
                label[x] = label[a]
            ancestor[x] = ancestor[a]
        return label[v]

    for i in range(n, 1, -1):
        w = vertex[i]
        for v in g.in_adj[w]:
            u = evaluate(v)
            if semi[u] < semi[w]:
                semi[w] = semi[u]
        bucket[vertex[semi[w]]].append(w)
        p = parent[w]
        ancestor[w] = p
        for v in bucket[p]:
            u = evaluate(v)
            idom[v] = u if semi[u] < semi[v] else p
        bucket[p].clear()
    for i in range(2, n + 1):
        w = vertex[i]
        if idom[w] != vertex[semi[w]]:
            idom[w] = idom[idom[w]]
    idom[root] = root

    children: list[list[int]] = [[] for _ in range(n + 1)]
    for v in range(1, n + 1):
        if v != root:
            children[idom[v]].append(v)
    return DominatorTree(root, tuple(idom), tuple(tuple(c) for c in children))


def nontrivial_dominators(g: DirectedGraph, root: int) -> frozenset[int]:
    return dominator_tree(g, root).nontrivial()


def strong_articulation_points(g: DirectedGraph, root: int = 1) -> frozenset[int]:
    """Vertices whose removal destroys strong connectivity.

    The non-trivial dominators of the forward and reverse flowgraphs rooted at
    ``root``, plus ``root`` itself when the graph falls apart without it.
    """
    _require_sc(g)
    if g.n <= 1:
        return frozenset()
    found = set(nontrivial_dominators(g, root)) | nontrivial_dominators(reverse(g), root)
    if not strongly_connected_without(g, vertex=root):
        found.add(root)
    return frozenset(found)


def _flowgraph_bridges(in_adj: Sequence[Sequence[int]], dt: DominatorTree) -> list[Edge]:
    # (u, v) lies on every root->v path iff v dominates all its other predecessors
    found = []
    for v in range(1, len(dt.idom)):
        if v == dt.root:
            continue
        u = dt.idom[v]
        preds = in_adj[v]
        if u in preds and all(w == u or dt.dominates(v, w) for w in preds):
            found.append((u, v))
    return found


def strong_bridges(g: DirectedGraph, root: int = 1) -> frozenset[Edge]:
    """Edges whose removal destroys strong connectivity.

    Union of the bridges of the flowgraphs ``(G, root)`` and ``(G^r, root)``.
    """
    _require_sc(g)
    if g.n <= 1:
        return frozenset()
    rg = reverse(g)
    found = set(_flowgraph_bridges(g.in_adj, dominator_tree(g, root)))
    found.update((v, u) for u, v in _flowgraph_bridges(rg.in_adj, dominator_tree(rg, root)))
    return frozenset(found)


def is_two_vertex_connected(g: DirectedGraph) -> bool:
    return g.n >= 3 and is_strongly_connected(g) and not strong_articulation_points(g)
