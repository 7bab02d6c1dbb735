"""Deterministic graph samples shared by the test modules."""

from __future__ import annotations

from twinless.errors import OracleBudgetExceeded
from twinless.generators import SplitMix64, random_sc, random_tsc
from twinless.graph import DirectedGraph, build_graph
from twinless.oracle import DEFAULT_BUDGET, OracleBudget, _check

# filled by the acceptance tests, printed by the terminal summary hook
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def within(g: DirectedGraph, budget: OracleBudget = DEFAULT_BUDGET, subsets: bool = False) -> bool:
    try:
        _check(g, budget, subsets)
    except OracleBudgetExceeded:
        return False
    return True


def tsc_sweep(count: int, seed: int, n_lo: int = 3, n_hi: int = 8, max_m: int | None = None,
              budget: OracleBudget = DEFAULT_BUDGET) -> list[DirectedGraph]:
    """``count`` random TSC graphs; draws outside the size limits or the oracle budget are rejected."""
    rng = SplitMix64(seed)
    graphs = []
    while len(graphs) < count:
        n = n_lo + rng.below(n_hi - n_lo + 1)
        m = n + rng.below(n + 1)
        g = random_tsc(n, m, rng.next_u64())
        if (max_m is None or g.m <= max_m) and within(g, budget):
            graphs.append(g)
    return graphs


def sc_sweep(count: int, seed: int, n_lo: int = 3, n_hi: int = 8) -> list[DirectedGraph]:
    rng = SplitMix64(seed)
    graphs = []
    for _ in range(count):
        n = n_lo + rng.below(n_hi - n_lo + 1)
        graphs.append(random_sc(n, n + rng.below(2 * n), rng.next_u64()))
    return graphs


def glued_blocks(rng: SplitMix64, max_n: int = 10) -> DirectedGraph:
    """Dense blocks of 3-4 vertices sharing single vertices or joined by antiparallel pairs.

    Such graphs tend to have several 2-vertex-twinless-connected components.
    """
    while True:
        blocks: list[list[int]] = []
        edges: set[tuple[int, int]] = set()
        nxt = 1
        for b in range(2 + rng.below(2)):
            size = 3 + rng.below(2)
            share = blocks[-1][rng.below(len(blocks[-1]))] if blocks and rng.below(10) < 6 else None
            fresh = list(range(nxt, nxt + size - (share is not None)))
            nxt += len(fresh)
            block = ([share] if share is not None else []) + fresh
            blocks.append(block)
            keep = 5 + rng.below(6)  # out of 10
            for u in block:
                for v in block:
                    if u != v and rng.below(10) < keep:
                        edges.add((u, v))
            if share is None and b > 0:
                u = blocks[-2][rng.below(len(blocks[-2]))]
                v = block[rng.below(len(block))]
                edges |= {(u, v), (v, u)}
        n = nxt - 1
        if n > max_n:
            continue
        for _ in range(rng.below(3)):
            u, v = rng.below(n) + 1, rng.below(n) + 1
            if u != v:
                edges.add((u, v))
        return build_graph(n, sorted(edges))
