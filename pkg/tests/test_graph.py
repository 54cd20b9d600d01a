import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import signed_graphs
from corrclust.graph import (
    AddVertex,
    DuplicateVertexError,
    Flip,
    InvalidEventError,
    Query,
    RemoveVertex,
    SignedGraph,
    UnknownVertexError,
)


def test_neighbors_triangle(triangle):
    assert triangle.neighbors(0) == [1, 2]
    assert triangle.neighbors(2) == [0, 1]


def test_neighbors_isolated():
    g = SignedGraph.from_edges([], vertices=[7])
    assert g.neighbors(7) == []
    assert g.degree(7) == 0


def test_neighbors_path(path3):
    assert path3.neighbors(1) == [0, 2]


def test_neighbors_unknown_vertex(triangle):
    with pytest.raises(UnknownVertexError):
        triangle.neighbors(9)


def test_intersection_size_triangle(triangle):
    assert triangle.intersection_size(0, 1) == 1


def test_intersection_size_path(path3):
    assert path3.intersection_size(0, 1) == 0


def test_intersection_size_k4(k4):
    # brute-force set intersection as the independent check
    for u, v in k4.edges():
        expected = len(set(k4.neighbors(u)) & set(k4.neighbors(v)))
        assert expected == 2
        assert k4.intersection_size(u, v) == expected


def test_intersection_unknown_vertex(k4):
    with pytest.raises(UnknownVertexError):
        k4.intersection_size(0, 11)


def test_flip_removes_and_restores(k4):
    assert k4.m == 6
    touched = k4.apply(Flip(0, 1))
    assert k4.m == 5
    assert touched == {0: 2, 1: 2}
    k4.apply(Flip(0, 1))
    assert k4.m == 6
    assert k4.neighbors(0) == [1, 2, 3]
    k4.validate()


def test_add_isolated_vertex():
    g = SignedGraph()
    assert (g.n, g.m) == (0, 0)
    g.apply(AddVertex(0, ()))
    assert (g.n, g.m) == (1, 0)


def test_remove_star_center(star4):
    assert star4.m == 3
    touched = star4.apply(RemoveVertex(0))
    assert star4.m == 0
    assert touched == {1: 0, 2: 0, 3: 0}
    assert 0 not in star4


def test_add_then_remove_round_trip(triangle):
    before = {v: triangle.neighbors(v) for v in triangle.vertices()}
    triangle.apply(AddVertex(9, (0, 2)))
    triangle.apply(RemoveVertex(9))
    after = {v: triangle.neighbors(v) for v in triangle.vertices()}
    assert before == after
    triangle.validate()


def test_event_validation(triangle):
    with pytest.raises(InvalidEventError):
        triangle.apply(Flip(1, 1))
    with pytest.raises(UnknownVertexError):
        triangle.apply(Flip(0, 5))
    with pytest.raises(DuplicateVertexError):
        triangle.apply(AddVertex(0, ()))
    with pytest.raises(UnknownVertexError):
        triangle.apply(AddVertex(3, (8,)))
    with pytest.raises(UnknownVertexError):
        triangle.apply(RemoveVertex(4))
    with pytest.raises(InvalidEventError):
        triangle.apply(Query(2.5))


def test_query_is_not_a_mutation(triangle):
    version = triangle.version
    assert triangle.apply(Query(1.0)) == {}
    assert triangle.version == version


def test_version_counter(triangle):
    v0 = triangle.version
    triangle.apply(Flip(0, 1))
    triangle.apply(AddVertex(5, (2,)))
    triangle.apply(RemoveVertex(5))
    assert triangle.version == v0 + 3


@given(signed_graphs(), st.data())
@settings(max_examples=60, deadline=None)
def test_random_event_sequences_keep_invariants(g, data):
    reference = {v: g.neighbors(v) for v in g.vertices()}
    pairs = [(u, v) for u in g.vertices() for v in g.vertices() if u < v]
    flips = data.draw(st.lists(st.sampled_from(pairs), max_size=8))
    for u, v in flips:
        g.apply(Flip(u, v))
    g.validate()
    # flipping each chosen pair once more restores the exact structure
    for u, v in reversed(flips):
        g.apply(Flip(u, v))
    assert {v: g.neighbors(v) for v in g.vertices()} == reference
    g.validate()


def test_edges_iterates_each_edge_once(k4):
    assert list(k4.edges()) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert sum(1 for _ in k4.edges()) == k4.m
