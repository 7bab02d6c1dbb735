"""Connectivity, bridges and 2-edge-connected components of undirected graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import ComponentLabeling, Edge, UnderlyingGraph


@dataclass(frozen=True)
class BridgeReport:
    bridges: frozenset[Edge]
    two_ecc: ComponentLabeling


def _components(u: UnderlyingGraph, skip: set[int] | frozenset[int] = frozenset()) -> ComponentLabeling:
    """Connected components, ignoring the undirected edge ids in ``skip``."""
    raw = [0] * (u.n + 1)
    comp = 0
    for s in range(1, u.n + 1):
        if raw[s]:
            continue
        comp += 1
        raw[s] = comp
        stack = [s]
        while stack:
            v = stack.pop()
            for w, i in u.adj[v]:
                if not raw[w] and i not in skip:
                    raw[w] = comp
                    stack.append(w)
    return ComponentLabeling.from_labels(raw)


def is_connected(u: UnderlyingGraph) -> bool:
    return u.n <= 1 or _components(u).count == 1


def _bridge_ids(u: UnderlyingGraph) -> list[int]:
    disc = [0] * (u.n + 1)
    low = [0] * (u.n + 1)
    t = 0
    found: list[int] = []
    for s in range(1, u.n + 1):
        if disc[s]:
            continue
        t += 1
        disc[s] = low[s] = t
        stack = [(s, -1, iter(u.adj[s]))]
        while stack:
            v, parent_edge, it = stack[-1]
            for w, i in it:
                if i == parent_edge:
                    continue
                if disc[w]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    t += 1
                    disc[w] = low[w] = t
                    stack.append((w, i, iter(u.adj[w])))
                    break
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        found.append(parent_edge)
    return found


def bridges_and_2ecc(u: UnderlyingGraph) -> BridgeReport:
    """All bridges (single low-link pass) and the 2-edge-connected classes."""
    ids = _bridge_ids(u)
    return BridgeReport(
        bridges=frozenset(u.uedges[i] for i in ids),
        two_ecc=_components(u, set(ids)),
    )


def is_two_edge_connected(u: UnderlyingGraph) -> bool:
    """Connected and bridgeless. Graphs with at most one vertex qualify."""
    if u.n <= 1:
        return True
    return is_connected(u) and not _bridge_ids(u)
