"""Twinless articulation points and twinless bridges.

Both searches seed the answer with the strong cuts (every strong articulation
point / strong bridge is also a twinless one) and then test the remaining
candidates. A candidate that is not a strong cut leaves a strongly connected
graph behind, so only the underlying 2-edge-connectivity needs rechecking.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._kernels import two_edge_connected_without
from .errors import PreconditionError
from .graph import DirectedGraph, Edge, underlying_graph, uedge_of
from .strong import is_strongly_connected, strong_articulation_points, strong_bridges
from .tscc import is_twinless_strongly_connected


@dataclass(frozen=True)
class TwinlessCutReport:
    taps: frozenset[int] = frozenset()
    tbridges: frozenset[Edge] = frozenset()
    method: str = ""
    candidate_counts: dict[str, int] = field(default_factory=dict, hash=False)
    # set when the input was not twinless strongly connected
    degraded: bool = False


def twinless_articulation_points(g: DirectedGraph, strict: bool = True) -> TwinlessCutReport:
    """Vertices whose removal leaves a graph that is not twinless strongly connected.

    With ``strict=False`` a strongly connected but not twinless strongly
    connected graph is accepted and the report is flagged ``degraded``.
    """
    if g.n < 3:
        raise PreconditionError("twinless articulation points need at least 3 vertices")
    tsc = is_twinless_strongly_connected(g)
    if not tsc and (strict or not is_strongly_connected(g)):
        raise PreconditionError("graph is not twinless strongly connected")
    seeds = strong_articulation_points(g, root=1)
    u = underlying_graph(g)
    found = set(seeds)
    tested = 0
    for x in g.vertices():
        if x in seeds:
            continue
        tested += 1
        if not two_edge_connected_without(u, skip_vertex=x):
            found.add(x)
    return TwinlessCutReport(
        taps=frozenset(found),
        method="strong-articulation-seeded",
        candidate_counts={"seeds": len(seeds), "tested": tested},
        degraded=not tsc,
    )


def _edge_probe(g: DirectedGraph, candidates, seeds: frozenset[Edge]) -> tuple[set[Edge], int]:
    u = underlying_graph(g)
    found = set(seeds)
    tested = 0
    for e in candidates:
        if e in seeds:
            continue
        tested += 1
        ue = uedge_of(*e)
        # deleting one arc of an antiparallel pair leaves the underlying graph intact
        skip = u.uedge_index[ue] if len(u.origin[ue]) == 1 else -1
        if not two_edge_connected_without(u, skip_edge=skip):
            found.add(e)
    return found, tested


def twinless_bridges_basic(g: DirectedGraph) -> TwinlessCutReport:
    """Test every edge that is not a strong bridge.

    A strongly connected input that is not twinless strongly connected has
    every edge as a twinless bridge; that report is flagged ``degraded``.
    """
    if not is_strongly_connected(g):
        raise PreconditionError("graph is not strongly connected")
    if not is_twinless_strongly_connected(g):
        return TwinlessCutReport(
            tbridges=frozenset(g.edges), method="basic",
            candidate_counts={"seeds": 0, "tested": 0}, degraded=True,
        )
    seeds = strong_bridges(g)
    found, tested = _edge_probe(g, g.edges, seeds)
    return TwinlessCutReport(
        tbridges=frozenset(found), method="basic",
        candidate_counts={"seeds": len(seeds), "tested": tested},
    )


def twinless_bridges_sparse(g: DirectedGraph) -> TwinlessCutReport:
    """Test only the edges of a sparse twinless strongly connected certificate.

    Deleting an edge outside the certificate keeps the certificate, so the
    graph stays twinless strongly connected.
    """
    from .mtscss import mtscss_3approx

    if not is_twinless_strongly_connected(g):
        raise PreconditionError("graph is not twinless strongly connected")
    seeds = strong_bridges(g)
    certificate = mtscss_3approx(g).edges
    found, tested = _edge_probe(g, sorted(certificate), seeds)
    return TwinlessCutReport(
        tbridges=frozenset(found), method="sparse",
        candidate_counts={"seeds": len(seeds), "tested": tested, "certificate": len(certificate)},
    )


def twinless_bridges(g: DirectedGraph) -> frozenset[Edge]:
    if is_twinless_strongly_connected(g):
        return twinless_bridges_sparse(g).tbridges
    return twinless_bridges_basic(g).tbridges


def is_two_edge_twinless_connected(g: DirectedGraph) -> bool:
    return g.n > 2 and is_twinless_strongly_connected(g) and not twinless_bridges_sparse(g).tbridges
