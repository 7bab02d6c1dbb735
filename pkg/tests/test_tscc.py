from __future__ import annotations

import pytest
from hypothesis import given

from conftest import digraphs, sc_graphs
from helpers import within
from twinless import fixtures
from twinless.errors import PreconditionError
from twinless.graph import build_graph, remove_edge
from twinless.oracle import oracle_is_tsc, oracle_tscc_relation
from twinless.strong import sccs
from twinless.tscc import is_twinless_strongly_connected, tscc_condensation, tscc_tree_path, tsccs

PAIR = build_graph(2, [(1, 2), (2, 1)])
C3 = build_graph(3, [(1, 2), (2, 3), (3, 1)])


def test_tsc_examples():
    assert not is_twinless_strongly_connected(PAIR)
    assert is_twinless_strongly_connected(C3)
    assert is_twinless_strongly_connected(build_graph(1, []))
    fig2 = fixtures.load("fig2")
    assert is_twinless_strongly_connected(fig2)
    minus = remove_edge(fig2, (5, 6))
    assert is_twinless_strongly_connected(minus) == oracle_is_tsc(minus)
    assert is_twinless_strongly_connected(fixtures.load("fig3a"))


def test_tscc_examples():
    assert tsccs(PAIR).as_sets() == {frozenset({1}), frozenset({2})}
    assert tsccs(fixtures.load("fig3b")).count == 3
    assert tsccs(fixtures.load("fig3c")).count == 2


def test_condensation_examples():
    cond = tscc_condensation(PAIR)
    assert cond.labels.count == 2 and len(cond.tree_edges) == 1
    assert set(cond.tree_edges[0].arcs) == {(1, 2), (2, 1)}
    assert len(tscc_tree_path(cond, 1, 2)) == 1

    cond = tscc_condensation(C3)
    assert cond.labels.count == 1 and cond.tree_edges == ()
    assert tscc_tree_path(cond, 1, 3) == []

    g = fixtures.load("fig3b")
    cond = tscc_condensation(g)
    assert {frozenset(te.arcs) for te in cond.tree_edges} == {
        frozenset({(2, 11), (11, 2)}),
        frozenset({(7, 9), (9, 7)}),
    }
    # 3 and 5 lie in adjacent components: adding (3, 5) merges exactly two of them
    path = tscc_tree_path(cond, 3, 5)
    assert [set(te.arcs) for te in path] == [{(7, 9), (9, 7)}]
    assert len(tscc_tree_path(cond, 3, 12)) == 1
    assert len(tscc_tree_path(cond, 5, 12)) == 2


def test_condensation_needs_strong_connectivity():
    with pytest.raises(PreconditionError):
        tscc_condensation(build_graph(3, [(1, 2), (2, 3)]))


@given(sc_graphs(min_n=2))
def test_condensation_is_a_tree_of_pairs(g):
    cond = tscc_condensation(g)
    assert len(cond.tree_edges) == cond.labels.count - 1
    for te in cond.tree_edges:
        (a, b), (c, d) = te.arcs
        assert (c, d) == (b, a) and g.has_edge(a, b) and g.has_edge(b, a)
        assert not cond.labels.same(a, b)
    # connected: every component is reachable from component of vertex 1
    for v in g.vertices():
        path = tscc_tree_path(cond, 1, v)
        assert len(path) <= cond.labels.count - 1


@given(digraphs(max_n=6, max_m=14))
def test_tsccs_match_oracle_relation(g):
    if within(g):
        assert tsccs(g).as_sets() == oracle_tscc_relation(g).as_sets()
        assert is_twinless_strongly_connected(g) == oracle_is_tsc(g)


@given(digraphs(max_n=7, max_m=16))
def test_tsccs_refine_sccs(g):
    t, s = tsccs(g), sccs(g)
    for v in g.vertices():
        for w in g.vertices():
            if t.same(v, w):
                assert s.same(v, w)
