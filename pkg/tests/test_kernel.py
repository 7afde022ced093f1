import random

import pytest
from conftest import BIG
from hypothesis import given, settings, strategies as st

from pfkernel.generators import pair_heavy_instance, random_instance, triple_heavy_instance
from pfkernel.graph import Graph, complete_graph, cycle_graph, path_graph
from pfkernel.instance import VC, Instance, decide
from pfkernel.kernel import (
    BoundViolation,
    LiftError,
    apply_rule1,
    apply_rule2,
    apply_rule3,
    apply_rule4,
    apply_rule5,
    apply_rule6,
    enumerate_chunks,
    find_anchor_triangles,
    kernelize,
    lift_solution,
    verify_all_bounds,
    verify_size_bounds,
)
from pfkernel.mis import alpha_pseudoforest
from pfkernel.oracle import alpha_exact, max_independent_set
from pfkernel.plugins import DegreeOnePlugin, PassThroughPlugin, PluginRejected, get_plugin
from pfkernel.trace import ReductionTrace, Rule3, Rule4


def edge_with_x(both: bool) -> Instance:
    # F = edge 0-1, X = {2}
    G = Graph(range(3), [(0, 1), (2, 0)] + ([(2, 1)] if both else []))
    return Instance(G, {2}, 1)


def anchored_triangles(n: int, extra: bool) -> Instance:
    """``n`` triangles spread over modulator {0, 1, 2}; with ``extra`` one vertex
    of each also sees modulator vertex 3, which spoils the anchor condition."""
    X = [0, 1, 2, 3] if extra else [0, 1, 2]
    edges, vid = [], len(X)
    for _ in range(n):
        a, b, c = vid, vid + 1, vid + 2
        edges += [(a, b), (b, c), (a, c), (a, 0), (b, 1), (c, 2)]
        if extra:
            edges.append((a, 3))
        vid += 3
    return Instance(Graph(range(vid), edges), frozenset(X), 0)


# --- chunks and anchor triangles ---

def test_chunk_examples():
    assert [c.members for c in enumerate_chunks(edge_with_x(False))] == [(2,)]
    assert enumerate_chunks(edge_with_x(True)) == []
    G = Graph(range(4), [(0, 1), (2, 3)])
    inst = Instance(G, {0, 1}, 1)
    assert all(len(c.members) == 1 for c in enumerate_chunks(inst))


def test_anchor_triangles():
    one = anchored_triangles(1, extra=False)
    [t] = find_anchor_triangles(one)
    assert t.triangle == (3, 4, 5) and set(t.anchors) == {0, 1, 2} and not t.redundant
    two_edges = one.evolve(graph=one.graph.delete({2}), modulator={0, 1})
    assert find_anchor_triangles(two_edges) == []
    pair = find_anchor_triangles(anchored_triangles(2, extra=False))
    assert [t.redundant for t in pair] == [False, True]


# --- individual rules ---

def test_rule1():
    inst = edge_with_x(True)
    out, rec = apply_rule1(inst)
    assert rec.vertex == 2 and out.k == inst.k and out.modulator == frozenset()
    assert out.forest == inst.forest
    assert apply_rule1(edge_with_x(False)) is None


def test_rule2():
    G = Graph(range(4), [(2, 0), (2, 1), (3, 0), (3, 1)])
    inst = Instance(G, {0, 1}, 1)
    out, rec = apply_rule2(inst)
    assert (rec.u, rec.v) == (0, 1) and out.graph.has_edge(0, 1)
    assert apply_rule2(out) is None
    # one edge component whose ends see different modulator vertices: pair conflict 1 < 2
    assert apply_rule2(Instance(Graph(range(4), [(2, 3), (2, 0), (3, 1)]), {0, 1}, 1)) is None


def test_rule3_adds_an_anchor_triangle():
    inst = anchored_triangles(4, extra=True)
    out, rec = apply_rule3(inst)
    assert rec.triple == (0, 1, 2) and out.k == inst.k + 1
    assert len(out.graph) == len(inst.graph) + 3
    [t] = find_anchor_triangles(out)
    assert set(t.triangle) == set(rec.triangle) and set(t.anchors) == {0, 1, 2}
    again = apply_rule3(out, fired=[rec.triple])
    assert again is None or again[1].triple != rec.triple


def test_rule3_skips_anchored_and_dependent_triples():
    assert apply_rule3(anchored_triangles(3, extra=False)) is None
    inst = anchored_triangles(4, extra=True)
    dependent = inst.evolve(graph=inst.graph.add_edges([(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)]))
    assert apply_rule3(dependent) is None


def test_rule4_empty_modulator():
    F = Graph(range(7), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)])
    inst = Instance(F, frozenset(), 5)
    red, trace = kernelize(inst)
    assert len(red.graph) == 0 and red.k == 5 - alpha_pseudoforest(F)


def test_rule4_isolated_vertex():
    # chunk {0} conflicts with the edge {2, 3}, so only the isolated vertex 4 goes
    inst = Instance(Graph(range(5), [(2, 3), (0, 2), (0, 3)]), {0, 1}, 2)
    out, rec = apply_rule4(inst)
    assert rec.component == (4,) and rec.alpha == 1 and out.k == 1
    assert apply_rule4(out) is None


def test_rule4_keeps_nonredundant_anchor_triangle():
    # three triangles on one anchor triple: the triple conflicts 3 >= |X| so it is
    # no chunk; the first (non-redundant) triangle stays, the next one goes
    inst = anchored_triangles(3, extra=False)
    out, rec = apply_rule4(inst)
    assert rec.component == (6, 7, 8)
    assert apply_rule4(out) is None


def test_rule5():
    forest = Instance(Graph(range(3), [(0, 1), (1, 2)]), {0}, 1)
    assert apply_rule5(forest)[0].modulator == {0}
    G = Graph(range(7), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)])
    out, rec = apply_rule5(Instance(G, frozenset(), 1))
    assert len(out.modulator) == 2 and out.forest.num_edges() < len(out.forest)


def test_rule6_plugins():
    inst = Instance(path_graph(4), frozenset(), 2)
    out, rec = apply_rule6(inst)
    assert out == inst and rec.plugin == "pass-through"
    empty = Instance(Graph([], []), frozenset(), 0)
    assert apply_rule6(empty, DegreeOnePlugin())[0] == empty
    out, rec = apply_rule6(inst, DegreeOnePlugin())
    assert len(out.graph) == 0 and out.k == 0
    with pytest.raises(PluginRejected):
        get_plugin("nope")


class LyingPlugin(PassThroughPlugin):
    name = "lying"

    def reduce(self, inst):
        return inst.evolve(k=inst.k + 1), "lie"


def test_rule6_spot_check_catches_wrong_plugin():
    with pytest.raises(PluginRejected):
        apply_rule6(Instance(path_graph(3), frozenset(), 2), LyingPlugin())


# --- pipeline ---

def test_already_reduced_is_unchanged():
    inst = Instance(complete_graph(4), {0}, 1)
    red, trace = kernelize(inst)
    red2, trace2 = kernelize(red)
    assert red2 == red and trace2.records == []


def test_kernelize_vc():
    inst = Instance(cycle_graph(5).add_vertices([5]).add_edges([(5, 0), (5, 2)]), {5}, 3, VC)
    red, trace = kernelize(inst)
    assert red.problem == VC and decide(red, BIG) == decide(inst, BIG)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_kernel_equivalence(seed):
    rng = random.Random(seed)
    inst = random_instance(rng, max_vertices=14)
    for k in range(len(inst.graph) + 1):
        red, _ = kernelize(inst.evolve(k=k))
        assert decide(red, BIG) == decide(inst.evolve(k=k), BIG)


def test_rule3_lowers_nothing_but_raises_k():
    inst = anchored_triangles(4, extra=True)
    a = alpha_exact(inst.graph, BIG)
    red, trace = kernelize(inst.evolve(k=a))
    assert any(isinstance(r, Rule3) for r in trace.records)
    assert decide(red, BIG) and not decide(kernelize(inst.evolve(k=a + 1))[0], BIG)


# --- lifting ---

def test_lift_empty_trace():
    inst = Instance(path_graph(3), frozenset(), 2)
    assert lift_solution(inst, ReductionTrace("IS", []), {0, 2}) == {0, 2}


def test_lift_rule4_adds_alpha():
    inst = Instance(Graph(range(4), [(1, 2), (2, 3)]), {0}, 3)
    trace = ReductionTrace("IS", [Rule4((1, 2, 3), 2)])
    out = lift_solution(inst, trace, {0})
    assert len(out) == 3 and inst.graph.is_independent(out)


def test_lift_rule3_without_triangle_vertices():
    inst = anchored_triangles(4, extra=True).evolve(k=1)
    trace = ReductionTrace("IS", [Rule3((0, 1, 2), (100, 101, 102))])
    assert lift_solution(inst, trace, {0, 1}) == {0, 1}


def test_lift_rejects_bad_solutions():
    inst = Instance(path_graph(3), frozenset(), 2)
    empty = ReductionTrace("IS", [])
    with pytest.raises(LiftError):
        lift_solution(inst, empty, {0, 1})
    with pytest.raises(LiftError):
        lift_solution(inst, empty, {0})
    with pytest.raises(LiftError):
        lift_solution(inst, empty, {0, 9})


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from(["random", "triple", "pair"]))
def test_lift_round_trip(seed, kind):
    gen = {"random": random_instance, "triple": triple_heavy_instance, "pair": pair_heavy_instance}[kind]
    inst = gen(random.Random(seed))
    alpha = alpha_exact(inst.graph, BIG)
    inst = inst.evolve(k=alpha)
    red, trace = kernelize(inst)
    sol = frozenset() if red.trivially_yes else max_independent_set(red.graph, BIG)
    out = lift_solution(inst, trace, sol)
    assert inst.graph.is_independent(out) and len(out) >= alpha


def test_lift_vc():
    inst = Instance(cycle_graph(5).add_vertices([5]).add_edges([(5, 0), (5, 2)]), {5}, 3, VC)
    red, trace = kernelize(inst)
    cover = red.graph.vertices - max_independent_set(red.graph, BIG)
    out = lift_solution(inst, trace, cover)
    assert len(out) <= 3 and inst.graph.is_independent(inst.graph.vertices - out)


# --- bounds ---

def test_bound_examples():
    inst = Instance(Graph(range(30), []), {0, 1}, 0)
    checks = verify_size_bounds(2, inst, "rules1-4", strict=False)
    assert checks[0].bound == 24 and checks[0].status == "fail"
    with pytest.raises(BoundViolation):
        verify_size_bounds(2, inst, "rules1-4")
    with pytest.raises(BoundViolation):
        verify_size_bounds(0, Instance(path_graph(2), frozenset(), 0), "rules1-4")
    [skip] = verify_size_bounds(2, inst, "rule6")
    assert skip.status == "skipped"


def test_compliant_plugin_bound():
    inst = Instance(Graph(range(10), []), {0}, 0)
    checks = verify_size_bounds(1, inst, "rule6", plugin_compliant=True)
    assert [c.bound for c in checks] == [6, 56 * 27 + 28 * 9 + 6]


def test_bounds_hold_on_generated_instances():
    rng = random.Random(5)
    for _ in range(40):
        inst = triple_heavy_instance(rng, k=3)
        _, trace = kernelize(inst)
        checks = verify_all_bounds(inst, trace)
        assert any(c.name == "k' - k" and c.status == "pass" for c in checks)
