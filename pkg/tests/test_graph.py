import pytest
from hypothesis import given, strategies as st

from pfkernel.gadgets import clause_gadget
from pfkernel.graph import (
    DimacsParseError,
    Graph,
    GraphError,
    closed_neighborhood,
    complete_graph,
    connected_components,
    cycle_graph,
    dump_dimacs_graph,
    induced_delete,
    load_dimacs_graph,
    neighborhood,
    path_graph,
)


def test_load_path():
    G = load_dimacs_graph("p edge 3 2\ne 1 2\ne 2 3")
    assert G.vertices == {0, 1, 2}
    assert G.edges() == [(0, 1), (1, 2)]


def test_load_empty():
    G = load_dimacs_graph("p edge 0 0")
    assert len(G) == 0 and G.num_edges() == 0


def test_load_dedups_symmetric_edges():
    G = load_dimacs_graph("p edge 2 2\ne 1 2\ne 2 1")
    assert G.edges() == [(0, 1)]


@pytest.mark.parametrize("text", [
    "e 1 2",
    "p edge x 1\ne 1 2",
    "p edge 2 1\ne 1 3",
    "p edge 2 1\ne 1 1",
    "p edge 2 1\ne 1",
])
def test_load_rejects_bad_input(text):
    with pytest.raises(DimacsParseError):
        load_dimacs_graph(text)


def test_parse_error_carries_line_number():
    with pytest.raises(DimacsParseError, match="line 3"):
        load_dimacs_graph("c hello\np edge 2 1\ne 1 5\n")


def test_sparse_ids_survive_round_trip():
    G = Graph([3, 7, 11], [(3, 11)])
    assert load_dimacs_graph(dump_dimacs_graph(G)) == G


@given(st.integers(0, 12), st.data())
def test_round_trip(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    G = Graph(range(n), edges)
    assert load_dimacs_graph(dump_dimacs_graph(G, "round trip")) == G


def test_neighborhood_examples():
    P = path_graph(3)
    assert neighborhood(P, {1}) == {0, 2}
    assert neighborhood(P, set()) == frozenset()
    K = complete_graph(3)
    assert neighborhood(K, {0, 1}) == {2}
    assert closed_neighborhood(P, {0}) == {0, 1}


def test_closed_neighborhood_rejects_missing_vertex():
    with pytest.raises(GraphError):
        closed_neighborhood(path_graph(2), {5})


def test_delete_examples():
    K = complete_graph(3)
    assert induced_delete(K, {0}).edges() == [(1, 2)]
    assert induced_delete(K, set()) == K
    assert len(induced_delete(K, K.vertices)) == 0


def test_components():
    G = complete_graph(3).add_vertices([3])
    assert connected_components(G) == [frozenset({0, 1, 2}), frozenset({3})]
    assert connected_components(Graph([], [])) == []
    G2, _ = clause_gadget(2)
    assert len(connected_components(G2)) == 1


def test_graph_is_immutable_value():
    C = cycle_graph(4)
    D = C.delete({0})
    assert 0 in C and 0 not in D
    assert C == cycle_graph(4)
    assert hash(C) == hash(cycle_graph(4))


def test_relabel():
    G = path_graph(3).relabel({0: 10, 1: 11, 2: 12})
    assert G.edges() == [(10, 11), (11, 12)]
