"""Brute-force reference answers straight from the definitions.

Nothing here calls the fast algorithms. Graphs are encoded as per-vertex
bitmasks over ``0..n-1``; twinless strong connectivity is decided by trying
every way to keep exactly one arc of each antiparallel pair and asking whether
any choice is strongly connected. Every entry point checks an
:class:`OracleBudget` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import OracleBudgetExceeded
from .graph import ComponentLabeling, DirectedGraph, Edge


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 8
    max_antiparallel_pairs: int = 12
    max_subset_edges: int = 14


DEFAULT_BUDGET = OracleBudget()


def _check(g: DirectedGraph, budget: OracleBudget, subsets: bool = False) -> None:
    if g.n > budget.max_n:
        raise OracleBudgetExceeded(f"n={g.n} exceeds max_n={budget.max_n}")
    pairs = sum(1 for u, v in g.edges if u < v and g.has_edge(v, u))
    if pairs > budget.max_antiparallel_pairs:
        raise OracleBudgetExceeded(f"{pairs} antiparallel pairs exceed {budget.max_antiparallel_pairs}")
    if subsets and g.m > budget.max_subset_edges:
        raise OracleBudgetExceeded(f"m={g.m} exceeds max_subset_edges={budget.max_subset_edges}")


def _closure(out: list[int], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= out[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _masks(n: int, edges) -> tuple[list[int], list[int]]:
    out = [0] * n
    inn = [0] * n
    for u, v in edges:
        out[u] |= 1 << v
        inn[v] |= 1 << u
    return out, inn


def _sc(n: int, vertices: int, edges) -> bool:
    """Strong connectivity of the subgraph on bitmask ``vertices`` (edges already restricted)."""
    if vertices & (vertices - 1) == 0:
        return True
    out, inn = _masks(n, edges)
    start = (vertices & -vertices).bit_length() - 1
    return _closure(out, start) == vertices and _closure(inn, start) == vertices


def _split_pairs(edges) -> tuple[list[Edge], list[tuple[Edge, Edge]]]:
    es = set(edges)
    single = [(u, v) for u, v in es if (v, u) not in es]
    pairs = [((u, v), (v, u)) for u, v in es if u < v and (v, u) in es]
    return single, pairs


def _orientations(edges):
    single, pairs = _split_pairs(edges)
    for choice in product(*pairs):
        yield single + list(choice)


def _tsc(n: int, vertices: int, edges) -> bool:
    if vertices & (vertices - 1) == 0:
        return True
    return any(_sc(n, vertices, chosen) for chosen in _orientations(edges))


def _zero_based(g: DirectedGraph) -> list[Edge]:
    return [(u - 1, v - 1) for u, v in g.edges]


def _restrict(edges, vertices: int) -> list[Edge]:
    return [(u, v) for u, v in edges if vertices >> u & 1 and vertices >> v & 1]


def oracle_is_sc(g: DirectedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    _check(g, budget)
    return g.n <= 1 or _sc(g.n, (1 << g.n) - 1, _zero_based(g))


def oracle_is_tsc(g: DirectedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    _check(g, budget)
    return g.n <= 1 or _tsc(g.n, (1 << g.n) - 1, _zero_based(g))


def oracle_tscc_pairs(g: DirectedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> set[tuple[int, int]]:
    """Pairs ``(v, w)`` mutually reachable in some one-arc-per-pair subgraph."""
    _check(g, budget)
    n = g.n
    full = (1 << n) - 1
    related = set()
    for chosen in _orientations(_zero_based(g)):
        out, inn = _masks(n, chosen)
        for v in range(n):
            both = _closure(out, v) & _closure(inn, v) & full
            for w in range(n):
                if both >> w & 1:
                    related.add((v + 1, w + 1))
    return related


def oracle_tscc_relation(g: DirectedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> ComponentLabeling:
    """Classes of the twinless reachability relation; raises if it is not transitive."""
    related = oracle_tscc_pairs(g, budget)
    raw = [0] * (g.n + 1)
    for v in g.vertices():
        raw[v] = min(w for w in g.vertices() if (v, w) in related)
    labels = ComponentLabeling.from_labels(raw)
    for v in g.vertices():
        for w in g.vertices():
            if ((v, w) in related) != labels.same(v, w):
                raise AssertionError(f"twinless reachability is not an equivalence at {(v, w)}")
    return labels


def oracle_tsc_by_paths(g: DirectedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Pairwise form: for all v, w some simple path v->w and a return path avoiding its twins."""
    _check(g, budget)
    n = g.n
    edges = set(_zero_based(g))
    adj = [[w for (x, w) in sorted(edges) if x == v] for v in range(n)]

    def simple_paths(src: int, dst: int):
        stack = [(src, [src])]
        while stack:
            v, path = stack.pop()
            if v == dst:
                yield path
                continue
            for w in adj[v]:
                if w not in path:
                    stack.append((w, path + [w]))

    def reachable_without(src: int, dst: int, banned: set[Edge]) -> bool:
        out, _ = _masks(n, [e for e in edges if e not in banned])
        return bool(_closure(out, src) >> dst & 1)

    for v in range(n):
        for w in range(v + 1, n):
            ok = False
            for path in simple_paths(v, w):
                twins = {(b, a) for a, b in zip(path, path[1:])}
                if reachable_without(w, v, twins):
                    ok = True
                    break
            if not ok:
                return False
    return True


def _min_subset(g: DirectedGraph, accept, budget: OracleBudget) -> int | None:
    _check(g, budget, subsets=True)
    n = g.n
    if n <= 1:
        return 0
    full = (1 << n) - 1
    edges = _zero_based(g)
    for k in range(n, len(edges) + 1):
        for subset in combinations(edges, k):
            if accept(n, full, subset):
                return k
    return None


def oracle_min_scss(g: DirectedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int | None:
    """Fewest edges of a strongly connected spanning subgraph, or ``None``."""
    return _min_subset(g, _sc, budget)


def oracle_min_tscss(g: DirectedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int | None:
    """Fewest edges of a twinless strongly connected spanning subgraph, or ``None``."""
    return _min_subset(g, _tsc, budget)


@dataclass(frozen=True)
class OracleCuts:
    taps: frozenset[int]
    tbridges: frozenset[Edge]
    saps: frozenset[int]
    sbridges: frozenset[Edge]


def oracle_cuts(g: DirectedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> OracleCuts:
    """Single-vertex and single-edge removals judged by the definitions."""
    _check(g, budget)
    n = g.n
    full = (1 << n) - 1
    edges = _zero_based(g)
    taps, saps, tbridges, sbridges = set(), set(), set(), set()
    for x in range(n):
        rest = full & ~(1 << x)
        sub = _restrict(edges, rest)
        if not _sc(n, rest, sub):
            saps.add(x + 1)
        if not _tsc(n, rest, sub):
            taps.add(x + 1)
    for e in edges:
        sub = [f for f in edges if f != e]
        arc = (e[0] + 1, e[1] + 1)
        if not _sc(n, full, sub):
            sbridges.add(arc)
        if not _tsc(n, full, sub):
            tbridges.add(arc)
    return OracleCuts(frozenset(taps), frozenset(tbridges), frozenset(saps), frozenset(sbridges))


def _subset_table(g: DirectedGraph, test) -> list[bool]:
    n = g.n
    edges = _zero_based(g)
    return [test(n, s, _restrict(edges, s)) for s in range(1 << n)]


def _maximal_blocks(g: DirectedGraph, test) -> frozenset[frozenset[int]]:
    """Maximal ``U`` with ``|U| >= 3``, ``G[U]`` passing ``test`` and no vertex failing it."""
    n = g.n
    ok = _subset_table(g, test)
    good = []
    for s in range(1 << n):
        if bin(s).count("1") < 3 or not ok[s]:
            continue
        if all(ok[s & ~(1 << x)] for x in range(n) if s >> x & 1):
            good.append(s)
    maximal = [s for s in good if not any(t != s and t & s == s for t in good)]
    return frozenset(frozenset(x + 1 for x in range(n) if s >> x & 1) for s in maximal)


def oracle_2vtcc(g: DirectedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> frozenset[frozenset[int]]:
    _check(g, budget)
    return _maximal_blocks(g, _tsc)


def oracle_2vcc(g: DirectedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> frozenset[frozenset[int]]:
    _check(g, budget)
    return _maximal_blocks(g, _sc)
