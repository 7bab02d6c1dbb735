from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import digraphs, sc_graphs
from helpers import within
from twinless import fixtures
from twinless.errors import OracleBudgetExceeded
from twinless.graph import build_graph
from twinless.oracle import (
    OracleBudget,
    oracle_2vcc,
    oracle_2vtcc,
    oracle_cuts,
    oracle_is_sc,
    oracle_is_tsc,
    oracle_min_scss,
    oracle_min_tscss,
    oracle_tsc_by_paths,
)

PAIR = build_graph(2, [(1, 2), (2, 1)])
C3 = build_graph(3, [(1, 2), (2, 3), (3, 1)])
FIXTURE_BUDGET = OracleBudget(max_n=10, max_antiparallel_pairs=14, max_subset_edges=16)


def test_small_cases():
    assert oracle_is_sc(PAIR) and not oracle_is_tsc(PAIR)
    assert oracle_is_tsc(C3) and not oracle_tsc_by_paths(PAIR) and oracle_tsc_by_paths(C3)
    assert oracle_min_scss(C3) == oracle_min_tscss(C3) == 3
    assert oracle_min_scss(PAIR) == 2 and oracle_min_tscss(PAIR) is None
    cuts = oracle_cuts(C3)
    assert cuts.taps == cuts.saps == {1, 2, 3} and cuts.tbridges == C3.edge_set


def test_budget_is_enforced():
    with pytest.raises(OracleBudgetExceeded):
        oracle_is_tsc(fixtures.load("fig1"))
    with pytest.raises(OracleBudgetExceeded):
        oracle_min_scss(fixtures.load("fig2"))


def test_fixture_values():
    fig1 = fixtures.load("fig1")
    cuts = oracle_cuts(fig1, FIXTURE_BUDGET)
    assert cuts.saps == {6, 9} and cuts.taps == {3, 4, 6, 9, 10}
    assert oracle_2vtcc(fig1, FIXTURE_BUDGET) == {frozenset({1, 2, 3, 4, 5}), frozenset({4, 6, 9, 10})}
    (vcc,) = oracle_2vcc(fig1, FIXTURE_BUDGET)
    assert vcc == {1, 2, 3, 4, 5, 6, 8, 9, 10}
    assert frozenset({1, 2, 3, 4, 5}) < vcc
    g = fixtures.load("fig4a")
    assert oracle_min_scss(g, FIXTURE_BUDGET) == oracle_min_tscss(g, FIXTURE_BUDGET) == 12


@settings(max_examples=60)
@given(digraphs(max_n=5, max_m=10))
def test_path_and_orientation_definitions_agree(g):
    # pairwise twin-avoiding paths versus a twin-free strongly connected spanning subgraph
    if within(g):
        assert oracle_tsc_by_paths(g) == oracle_is_tsc(g)


@settings(max_examples=40)
@given(sc_graphs(min_n=2, max_n=5))
def test_path_definition_on_strongly_connected_graphs(g):
    if within(g):
        assert oracle_tsc_by_paths(g) == oracle_is_tsc(g)
