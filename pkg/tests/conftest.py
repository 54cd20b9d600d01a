"""Shared fixtures, hypothesis strategies, and brute-force helpers."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from corrclust.graph import SignedGraph


def complete_graph(n: int) -> SignedGraph:
    return SignedGraph.from_edges(
        [(u, v) for u in range(n) for v in range(u + 1, n)]
    )


@pytest.fixture
def triangle() -> SignedGraph:
    return complete_graph(3)


@pytest.fixture
def path3() -> SignedGraph:
    return SignedGraph.from_edges([(0, 1), (1, 2)])


@pytest.fixture
def k4() -> SignedGraph:
    return complete_graph(4)


@pytest.fixture
def star4() -> SignedGraph:
    """Center 0 with leaves 1, 2, 3."""
    return SignedGraph.from_edges([(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k4_pendant() -> SignedGraph:
    """K4 on 0..3 plus a pendant vertex 4 attached to 0.

    At eps = 0.8 vertex 0 is light while 1, 2, 3 are heavy, and the
    agreeing light-heavy edges (0, i) keep the cluster {0, 1, 2, 3}
    together. Vertex 1 is light at 0.73 but heavy at 0.8.
    """
    return SignedGraph.from_edges(
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]
    )


@st.composite
def signed_graphs(draw, min_n: int = 2, max_n: int = 20):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return SignedGraph.from_edges(edges, vertices=range(n))


def brute_force_cost(g: SignedGraph, assignment: dict[int, int]) -> int:
    """O(n^2) enumeration of every vertex pair."""
    verts = g.vertices()
    cost = 0
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            same = assignment[u] == assignment[v]
            if g.has_edge(u, v):
                cost += 0 if same else 1
            else:
                cost += 1 if same else 0
    return cost
