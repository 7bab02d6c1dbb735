from __future__ import annotations

import pytest
from hypothesis import given

from conftest import digraphs, sc_graphs
from twinless import fixtures
from twinless.errors import PreconditionError
from twinless.graph import build_graph, reverse
from twinless.oracle import OracleBudget, oracle_cuts
from twinless.strong import (
    dominator_tree,
    is_strongly_connected,
    is_two_vertex_connected,
    nontrivial_dominators,
    sccs,
    strong_articulation_points,
    strong_bridges,
    strongly_connected_without,
)

C3 = build_graph(3, [(1, 2), (2, 3), (3, 1)])
K3 = build_graph(3, [(u, v) for u in range(1, 4) for v in range(1, 4) if u != v])
BIG = OracleBudget(max_n=10, max_antiparallel_pairs=20)


def reach(g, s, banned=0):
    if s == banned:
        return set()
    seen, stack = {s}, [s]
    while stack:
        for w in g.out_adj[stack.pop()]:
            if w != banned and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def test_scc_examples():
    assert sccs(C3).count == 1
    assert sccs(build_graph(2, [(1, 2)])).count == 2
    assert sccs(fixtures.load("fig3b")).count == 1
    assert is_strongly_connected(C3) and is_strongly_connected(fixtures.load("fig1"))
    assert not is_strongly_connected(build_graph(2, [(1, 2)]))
    assert is_strongly_connected(build_graph(1, []))


@given(digraphs())
def test_sccs_are_mutual_reachability(g):
    labels = sccs(g)
    fwd = {v: reach(g, v) for v in g.vertices()}
    for v in g.vertices():
        for w in g.vertices():
            assert labels.same(v, w) == (w in fwd[v] and v in fwd[w])


def test_dominator_examples():
    dt = dominator_tree(C3, 1)
    assert dt.idom[2] == 1 and dt.idom[3] == 2
    diamond = build_graph(4, [(1, 2), (1, 3), (2, 4), (3, 4)])
    assert dominator_tree(diamond, 1).idom[4] == 1
    assert nontrivial_dominators(C3, 1) == {2}
    assert nontrivial_dominators(diamond, 1) == frozenset()
    fig1 = fixtures.load("fig1")
    assert nontrivial_dominators(fig1, 1) == {9}
    assert nontrivial_dominators(reverse(fig1), 1) == {6}


def test_dominator_needs_reachability():
    with pytest.raises(PreconditionError):
        dominator_tree(build_graph(3, [(1, 2)]), 1)


@given(sc_graphs(min_n=2))
def test_dominators_match_brute_force(g):
    dt = dominator_tree(g, 1)
    for u in g.vertices():
        strict = {v for v in g.vertices() if v not in (1, u) and u not in reach(g, 1, banned=v)}
        if u != 1:
            strict.add(1)
        chain = set()
        x = u
        while x != 1:
            x = dt.idom[x]
            chain.add(x)
        assert chain == strict
        for v in g.vertices():
            assert dt.dominates(v, u) == (v == u or v in strict)
        for c in dt.children[u]:
            assert dt.idom[c] == u


def test_sap_examples():
    assert strong_articulation_points(C3) == {1, 2, 3}
    assert strong_articulation_points(fixtures.load("fig1")) == {6, 9}
    assert strong_articulation_points(fixtures.load("fig2")) == frozenset()
    with pytest.raises(PreconditionError):
        strong_articulation_points(build_graph(3, [(1, 2), (2, 3)]))


def test_strong_bridge_examples():
    assert strong_bridges(C3) == C3.edge_set
    assert strong_bridges(K3) == frozenset()
    g = fixtures.load("fig4a")
    assert strong_bridges(g) == oracle_cuts(g, BIG).sbridges
    assert (9, 1) in strong_bridges(g)


@given(sc_graphs(min_n=3))
def test_cuts_match_definitions(g):
    saps = strong_articulation_points(g)
    bridges = strong_bridges(g)
    assert saps == {v for v in g.vertices() if not strongly_connected_without(g, vertex=v)}
    assert bridges == {e for e in g.edges if not strongly_connected_without(g, edge=e)}
    for root in g.vertices():
        assert strong_articulation_points(g, root) == saps
        assert strong_bridges(g, root) == bridges


def test_two_vertex_connected():
    assert not is_two_vertex_connected(C3)
    assert is_two_vertex_connected(fixtures.load("fig2"))
    assert not is_two_vertex_connected(fixtures.load("fig1"))
