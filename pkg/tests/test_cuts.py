from __future__ import annotations

import pytest
from hypothesis import given

from conftest import sc_graphs, tsc_graphs
from helpers import within
from twinless import fixtures
from twinless.cuts import (
    is_two_edge_twinless_connected,
    twinless_articulation_points,
    twinless_bridges,
    twinless_bridges_basic,
    twinless_bridges_sparse,
)
from twinless.errors import PreconditionError
from twinless.generators import random_tsc
from twinless.graph import build_graph
from twinless.oracle import OracleBudget, oracle_cuts
from twinless.strong import strong_articulation_points, strong_bridges
from twinless.tscc import is_twinless_strongly_connected

PAIR = build_graph(2, [(1, 2), (2, 1)])
C3 = build_graph(3, [(1, 2), (2, 3), (3, 1)])


def test_tap_examples():
    assert twinless_articulation_points(C3).taps == {1, 2, 3}
    assert twinless_articulation_points(fixtures.load("fig1")).taps == {3, 4, 6, 9, 10}
    assert 4 in twinless_articulation_points(fixtures.load("fig5")).taps


def test_tap_preconditions():
    with pytest.raises(PreconditionError):
        twinless_articulation_points(PAIR)
    with pytest.raises(PreconditionError):
        twinless_articulation_points(fixtures.load("fig3b"))
    report = twinless_articulation_points(fixtures.load("fig3b"), strict=False)
    assert report.degraded


def test_tbridge_examples():
    assert twinless_bridges_basic(C3).tbridges == C3.edge_set
    assert twinless_bridges_sparse(C3).tbridges == C3.edge_set
    assert twinless_bridges_basic(PAIR).tbridges == PAIR.edge_set
    fig2 = fixtures.load("fig2")
    assert twinless_bridges_basic(fig2).tbridges == frozenset()
    sparse = twinless_bridges_sparse(fig2)
    assert sparse.tbridges == frozenset() and sparse.candidate_counts["tested"] <= 3 * fig2.n


def test_tbridge_preconditions():
    with pytest.raises(PreconditionError):
        twinless_bridges_basic(build_graph(3, [(1, 2), (2, 3)]))
    with pytest.raises(PreconditionError):
        twinless_bridges_sparse(PAIR)
    # strongly connected but not twinless: every edge is a twinless bridge
    g = fixtures.load("fig3b")
    report = twinless_bridges_basic(g)
    assert report.degraded and report.tbridges == g.edge_set == oracle_cuts_big(g).tbridges


def oracle_cuts_big(g):
    return oracle_cuts(g, OracleBudget(max_n=14, max_antiparallel_pairs=14))


def test_methods_agree_on_seeded_graph():
    g = random_tsc(8, 14, 99)
    assert twinless_bridges_basic(g).tbridges == twinless_bridges_sparse(g).tbridges == twinless_bridges(g)


def test_two_edge_twinless():
    assert is_two_edge_twinless_connected(fixtures.load("fig2"))
    assert not is_two_edge_twinless_connected(C3)
    assert not is_two_edge_twinless_connected(PAIR)


@given(tsc_graphs())
def test_cuts_match_oracle(g):
    if not within(g):
        return
    oc = oracle_cuts(g)
    taps = twinless_articulation_points(g).taps
    assert taps == oc.taps
    assert twinless_bridges_basic(g).tbridges == oc.tbridges
    assert twinless_bridges_sparse(g).tbridges == oc.tbridges
    assert strong_articulation_points(g) <= taps
    assert strong_bridges(g) <= oc.tbridges


@given(sc_graphs(min_n=3))
def test_bridges_on_strongly_connected_graphs(g):
    report = twinless_bridges_basic(g)
    assert strong_bridges(g) <= report.tbridges
    assert report.degraded == (not is_twinless_strongly_connected(g))
    if within(g):
        assert report.tbridges == oracle_cuts(g).tbridges
