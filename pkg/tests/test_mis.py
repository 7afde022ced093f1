import random

import pytest
from conftest import brute_alpha
from hypothesis import given, settings, strategies as st

from pfkernel import mis
from pfkernel.gadgets import clause_gadget, spikes
from pfkernel.generators import random_pseudoforest, random_pseudotree, random_subset, random_tree
from pfkernel.graph import Graph, GraphError, complete_graph, path_graph
from pfkernel.oracle import alpha_exact
from pfkernel.pseudoforest import NotAPseudoforest, RootedTree


def rooted(G, r):
    return RootedTree.from_graph(G, r)


# --- trees ---

def test_tree_single_vertex():
    a, table = mis.alpha_tree(rooted(Graph([0], []), 0))
    assert a == 1 and table[0].critical


def test_tree_single_edge():
    a, table = mis.alpha_tree(rooted(path_graph(2), 0))
    assert a == 1 and not table[0].critical


def test_tree_star_with_leaves_forbidden():
    star = Graph(range(4), [(0, 1), (0, 2), (0, 3)])
    a, table = mis.alpha_tree(rooted(star, 0), {1, 2, 3})
    assert a == 1 and table[0].critical


def test_forbidden_root_has_no_include_option():
    a, table = mis.alpha_tree(rooted(path_graph(3), 0), {0})
    assert table[0].inc is mis.IMPOSSIBLE and a == 1


# --- paths and cycles ---

@pytest.mark.parametrize("n,cyclic,forbidden,expected", [
    (5, True, (), 2),
    (4, True, (0,), 2),
    (6, True, (0, 3), 2),
    (1, False, (), 1),
    (4, False, (), 2),
    (5, False, (2,), 2),
    (3, False, (0, 1, 2), 0),
])
def test_path_cycle(n, cyclic, forbidden, expected):
    assert mis.alpha_path_cycle(list(range(n)), cyclic, forbidden) == expected


def test_short_cycle_rejected():
    with pytest.raises(GraphError):
        mis.alpha_path_cycle([0, 1], True)


# --- pseudotrees ---

def test_pseudotree_examples():
    assert mis.alpha_pseudotree(complete_graph(3)) == 1
    pend = complete_graph(3).add_vertices([3]).add_edges([(0, 3)])
    assert mis.alpha_pseudotree(pend) == 2
    three = complete_graph(3).add_vertices([3, 4, 5]).add_edges([(0, 3), (1, 4), (2, 5)])
    assert mis.alpha_pseudotree(three) == 3


def test_pseudoforest_examples():
    two = Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert mis.alpha_pseudoforest(two) == 2
    assert mis.alpha_pseudoforest(Graph([], [])) == 0
    tri_p3 = Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)])
    assert mis.alpha_pseudoforest(tri_p3, {4}) == 3


def test_rejects_non_pseudoforest():
    with pytest.raises(NotAPseudoforest):
        mis.alpha_pseudoforest(complete_graph(4))


@settings(max_examples=300)
@given(st.integers(1, 12), st.integers(0, 10**9), st.floats(0, 0.6))
def test_pseudotree_matches_brute_force(n, seed, p):
    rng = random.Random(seed)
    P = random_pseudotree(n, rng)
    Z = random_subset(P.vertices, rng, p)
    assert mis.alpha_pseudotree(P, Z) == brute_alpha(P.delete(Z))


@settings(max_examples=100)
@given(st.integers(1, 14), st.integers(0, 10**9), st.floats(0, 0.5))
def test_mis_set_is_valid(n, seed, p):
    rng = random.Random(seed)
    F = random_pseudoforest(n, rng)
    Z = random_subset(F.vertices, rng, p)
    I = mis.mis_pseudoforest_avoiding(F, Z)
    assert F.is_independent(I) and not I & Z
    assert len(I) == brute_alpha(F.delete(Z))


def test_mis_examples():
    assert len(mis.mis_pseudoforest_avoiding(path_graph(2))) == 1
    assert mis.mis_pseudoforest_avoiding(path_graph(3), {0}) in ({1}, {2})


def test_gadget_is_outside_the_engine_domain():
    # the gadget's triangles share a component, so the engine refuses it;
    # the oracle confirms spikes plus both ends form a maximum independent set
    G, labels = clause_gadget(2)
    with pytest.raises(NotAPseudoforest):
        mis.mis_pseudoforest_avoiding(G)
    want = {v for v, role in labels.items() if role in ("r0", "l3", "s1", "s2")}
    assert G.is_independent(want) and len(want) == alpha_exact(G) == 4


# --- conflicts ---

def _with_x(F, adj):
    x = max(F.vertices) + 1
    return F.add_vertices([x]).add_edges([(x, v) for v in adj]), x


def test_conflict_examples():
    e = path_graph(2)
    G, x = _with_x(e, [0])
    assert mis.conflicts(G, e, [x]) == 0
    G, x = _with_x(e, [0, 1])
    assert mis.conflicts(G, e, [x]) == 1
    two = Graph(range(4), [(0, 1), (2, 3)])
    G, x = _with_x(two, [0, 1, 2, 3])
    assert mis.conflicts(G, two, [x]) == 2


def test_conflicts_reject_overlap():
    with pytest.raises(GraphError):
        mis.conflicts(path_graph(3), path_graph(3), [1])


# --- small obstructions ---

def test_no_drop_no_witness():
    assert mis.check_small_obstruction(path_graph(2), {0}) is None


def test_tree_pair_exists():
    P = path_graph(5)
    w = mis.find_small_obstruction(P, {0, 2, 4}, size=2)
    assert w is not None and len(w) == 2
    assert brute_alpha(P.delete(w)) < brute_alpha(P)


@settings(max_examples=200)
@given(st.integers(1, 12), st.integers(0, 10**9), st.floats(0.1, 0.7))
def test_triple_witness(n, seed, p):
    rng = random.Random(seed)
    P = random_pseudotree(n, rng)
    Z = random_subset(P.vertices, rng, p)
    base = brute_alpha(P)
    w = mis.check_small_obstruction(P, Z)
    if brute_alpha(P.delete(Z)) == base:
        assert w is None
    else:
        assert len(w) == 3 and set(w) <= Z
        assert brute_alpha(P.delete(w)) < base


@settings(max_examples=100)
@given(st.integers(1, 14), st.integers(0, 10**9), st.floats(0.1, 0.7))
def test_tree_pair_witness(n, seed, p):
    rng = random.Random(seed)
    T = random_tree(n, rng)
    Z = random_subset(T.vertices, rng, p)
    w = mis.find_small_obstruction(T, Z, size=2)
    if brute_alpha(T.delete(Z)) < brute_alpha(T):
        assert w is not None and brute_alpha(T.delete(w)) < brute_alpha(T)


def test_spike_free_gadget_has_lower_alpha():
    G, labels = clause_gadget(3)
    assert mis.alpha_pseudoforest(G.delete(spikes(labels))) == 4
