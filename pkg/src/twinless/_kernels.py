"""Repeated 2-edge-connectivity probes over a fixed undirected graph.

Twinless cut detection asks "is the underlying graph still 2-edge-connected
without vertex x / edge e?" once per candidate. The probe below runs on CSR
arrays so that large inputs can use a numba-compiled copy of the same code.
"""

from __future__ import annotations

import logging
from functools import cache

import numpy as np

from .graph import UnderlyingGraph

log = logging.getLogger(__name__)

# below this many adjacency entries the interpreter is faster than paying for the JIT load
JIT_MIN_ARCS = 4000


def _probe(indptr, nbr, eid, n, skip_vertex, skip_edge):
    remaining = n - 1 if skip_vertex > 0 else n
    if remaining <= 1:
        return True
    start = 2 if skip_vertex == 1 else 1
    disc = np.zeros(n + 1, np.int64)
    low = np.zeros(n + 1, np.int64)
    ptr = np.zeros(n + 1, np.int64)
    stack_v = np.zeros(n + 1, np.int64)
    stack_e = np.zeros(n + 1, np.int64)
    t = 1
    disc[start] = 1
    low[start] = 1
    ptr[start] = indptr[start]
    stack_v[0] = start
    stack_e[0] = -1
    top = 0
    seen = 1
    while top >= 0:
        v = stack_v[top]
        k = ptr[v]
        if k < indptr[v + 1]:
            ptr[v] = k + 1
            w = nbr[k]
            e = eid[k]
            if w == skip_vertex or e == skip_edge or e == stack_e[top]:
                continue
            if disc[w] == 0:
                t += 1
                disc[w] = t
                low[w] = t
                ptr[w] = indptr[w]
                top += 1
                stack_v[top] = w
                stack_e[top] = e
                seen += 1
            elif disc[w] < low[v]:
                low[v] = disc[w]
        else:
            top -= 1
            if top >= 0:
                p = stack_v[top]
                if low[v] > disc[p]:
                    return False
                if low[v] < low[p]:
                    low[p] = low[v]
    return seen == remaining


@cache
def _jitted():
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        log.warning("numba unavailable; using interpreted probe")
        return _probe
    return numba.njit(cache=True)(_probe)


def two_edge_connected_without(
    u: UnderlyingGraph, skip_vertex: int = 0, skip_edge: int = -1, mode: str = "auto"
) -> bool:
    """Whether ``u`` minus one vertex and/or one undirected edge id is 2-edge-connected.

    ``mode`` is ``"auto"``, ``"python"`` or ``"jit"``.
    """
    indptr, nbr, eid = u.csr
    if mode == "jit" or (mode == "auto" and len(nbr) >= JIT_MIN_ARCS):
        fn = _jitted()
    else:
        fn = _probe
    return bool(fn(indptr, nbr, eid, u.n, skip_vertex, skip_edge))
