"""Twinless strong connectivity for directed graphs."""

from .cuts import (
    TwinlessCutReport,
    is_two_edge_twinless_connected,
    twinless_articulation_points,
    twinless_bridges,
    twinless_bridges_basic,
    twinless_bridges_sparse,
)
from .errors import GraphInputError, InvariantViolation, OracleBudgetExceeded, PreconditionError
from .graph import (
    ComponentLabeling,
    DirectedGraph,
    UnderlyingGraph,
    build_graph,
    induced_subgraph,
    remove_edge,
    remove_vertex,
    reverse,
    spanning_subgraph,
    underlying_graph,
)
from .io import parse_edge_list, serialize_edge_list
from .mtscss import (
    SpanningSubgraphResult,
    mtscss_2approx,
    mtscss_3approx,
    mtscss_repair,
    mtscss_repair_fast,
    two_trees_subgraph,
)
from .strong import (
    dominator_tree,
    is_strongly_connected,
    is_two_vertex_connected,
    sccs,
    strong_articulation_points,
    strong_bridges,
)
from .tscc import is_twinless_strongly_connected, tscc_condensation, tscc_tree_path, tsccs
from .undirected import bridges_and_2ecc, is_connected, is_two_edge_connected
from .vtcc import Vtcc2Report, is_two_vertex_twinless_connected, two_vertex_twinless_components

__version__ = "0.1.0"
