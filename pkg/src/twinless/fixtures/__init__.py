"""Edge lists of the worked example graphs, shipped as package data."""

from __future__ import annotations

from importlib import resources

from ..graph import DirectedGraph

NAMES = ("fig1", "fig2", "fig3a", "fig3b", "fig3c", "fig4a", "fig4b", "fig4c", "fig5", "cycle2")


def fixture_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    return resources.files(__name__).joinpath(f"{name}.txt").read_text()


def load(name: str) -> DirectedGraph:
    from ..io import parse_edge_list

    return parse_edge_list(fixture_text(name))
