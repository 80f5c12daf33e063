from __future__ import annotations

import pytest

from moytree.generate import seed_lens_triangle
from moytree.graph import DirectedMultigraph, Edge
from moytree.planar import decorate


@pytest.fixture
def make_graph():
    """Build a graph from (id, tail, head, weight) records."""

    def build(vertices, records) -> DirectedMultigraph:
        return DirectedMultigraph(vertices, [Edge(*r) for r in records])

    return build


@pytest.fixture
def lens_map():
    """The three-vertex two-lens diagram with weights built from
    (1, 2, 3); the package's worked example."""
    return seed_lens_triangle(1, 2, 3)


@pytest.fixture
def lens_graph(lens_map):
    return lens_map.graph


@pytest.fixture
def lens_diagram(lens_map):
    return decorate(lens_map, "e23")
