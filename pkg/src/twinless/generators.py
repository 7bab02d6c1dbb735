"""Seeded graph generators.

Randomness comes from SplitMix64 so that a seed reproduces the same graph in
any language. Bounded draws use rejection: with ``t = (2**64 - bound) % bound``,
draw ``r`` until ``r >= t`` and return ``r % bound``.
"""

from __future__ import annotations

from .errors import GraphInputError, InvariantViolation
from .graph import DirectedGraph, build_graph
from .tscc import is_twinless_strongly_connected, tsccs

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK:
            raise GraphInputError("seed must be an unsigned 64-bit integer")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        threshold = ((1 << 64) - bound) % bound
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def cycle(n: int) -> DirectedGraph:
    if n < 1:
        raise GraphInputError("cycle needs at least one vertex")
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def _random_sc_edges(n: int, m: int, rng: SplitMix64) -> list[tuple[int, int]]:
    edges: list[tuple[int, int]] = []
    present: set[tuple[int, int]] = set()

    def add(e: tuple[int, int]) -> None:
        if e not in present:
            present.add(e)
            edges.append(e)

    # a random out-branching, then a random in-branching with the same root
    root = 0
    for inward in (False, True):
        order = list(range(1, n + 1))
        rng.shuffle(order)
        if inward:
            k = order.index(root)
            order[0], order[k] = order[k], order[0]
        root = order[0]
        for i in range(1, n):
            p = order[rng.below(i)]
            add((order[i], p) if inward else (p, order[i]))
    target = min(max(m, len(edges)), n * (n - 1))
    while len(edges) < target:
        u, v = rng.below(n) + 1, rng.below(n) + 1
        if u != v:
            add((u, v))
    return edges


def random_sc(n: int, m: int, seed: int) -> DirectedGraph:
    """Strongly connected graph with ``max(m, |branchings|)`` edges (capped at ``n(n-1)``).

    An out-branching and an in-branching sharing a random root guarantee
    strong connectivity (the root reaches every vertex and every vertex
    reaches the root); the remaining edges are uniform among absent ordered pairs.
    """
    if n < 1:
        raise GraphInputError("random-sc needs at least one vertex")
    return build_graph(n, _random_sc_edges(n, m, SplitMix64(seed)))


def random_tsc(n: int, m: int, seed: int) -> DirectedGraph:
    """A :func:`random_sc` graph, then random absent edges joining distinct TSCCs until twinless."""
    if n == 2 or n < 1:
        raise GraphInputError("no twinless strongly connected graph has exactly 2 vertices")
    rng = SplitMix64(seed)
    edges = _random_sc_edges(n, m, rng)
    g = build_graph(n, edges)
    while not is_twinless_strongly_connected(g):
        label = tsccs(g).label
        present = g.edge_set
        for _ in range(64 * n):
            u, v = rng.below(n) + 1, rng.below(n) + 1
            if u != v and label[u] != label[v] and (u, v) not in present:
                break
        else:
            options = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)
                       if label[u] != label[v] and (u, v) not in present]
            if not options:
                raise InvariantViolation("no edge can join two TSCCs")
            u, v = options[rng.below(len(options))]
        edges.append((u, v))
        g = build_graph(n, edges)
    return g
