import random

import pytest
from conftest import brute_alpha, petersen
from hypothesis import given, settings, strategies as st

from pfkernel.gadgets import clause_gadget
from pfkernel.graph import Graph, complete_graph, cycle_graph, path_graph
from pfkernel.oracle import (
    OracleBudget,
    OracleBudgetExceeded,
    alpha_exact,
    has_independent_set,
    max_independent_set,
    min_vertex_cover_size,
)


def test_examples():
    assert alpha_exact(cycle_graph(5)) == 2
    assert alpha_exact(clause_gadget(3)[0]) == 5
    assert alpha_exact(petersen()) == 4 == brute_alpha(petersen())
    assert alpha_exact(Graph([], [])) == 0


def test_has_independent_set():
    assert has_independent_set(complete_graph(4), 0)
    assert not has_independent_set(path_graph(2), 2)
    for k in range(1, 6):
        G, _ = clause_gadget(k)
        assert has_independent_set(G, k + 2)
        assert not has_independent_set(G, k + 3)


def test_vertex_cover():
    assert min_vertex_cover_size(complete_graph(3)) == 2
    assert min_vertex_cover_size(petersen()) == 6


def test_budget_refuses_large_graphs():
    with pytest.raises(OracleBudgetExceeded):
        alpha_exact(path_graph(30))
    with pytest.raises(OracleBudgetExceeded):
        alpha_exact(cycle_graph(60), OracleBudget(max_vertices=100, max_nodes=1))
    with pytest.raises(ValueError):
        OracleBudget(max_vertices=0)


@settings(max_examples=200)
@given(st.integers(0, 13), st.floats(0, 1), st.integers(0, 10**9))
def test_matches_brute_force(n, p, seed):
    rng = random.Random(seed)
    G = Graph(range(n), [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    a = alpha_exact(G)
    assert a == brute_alpha(G)
    I = max_independent_set(G)
    assert len(I) == a and G.is_independent(I)
    assert has_independent_set(G, a) and not has_independent_set(G, a + 1)
