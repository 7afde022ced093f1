"""Finding pseudoforest modulators when none is supplied."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError
from .pseudoforest import _strip_leaves, is_mock_forest, is_pseudoforest

EXACT, GREEDY, USER = "exact", "greedy", "user-supplied"


@dataclass(frozen=True)
class ModulatorResult:
    modulator: frozenset[int]
    method: str
    certified_minimum: bool


def verify_modulator(G: Graph, X: Iterable[int], mock_forest: bool = False) -> bool:
    """Whether ``G - X`` is a pseudoforest (or, with ``mock_forest``, a mock forest)."""
    X = frozenset(X)
    if not X <= G.vertices:
        raise GraphError(f"modulator vertices {sorted(X - G.vertices)} not in graph")
    rest = G.delete(X)
    return is_mock_forest(rest) if mock_forest else is_pseudoforest(rest)


def _overfull_component(G: Graph) -> frozenset[int] | None:
    for comp in G.connected_components():
        if sum(G.degree(v) for v in comp) // 2 > len(comp):
            return comp
    return None


def _witness_from_root(H: Graph, root: int) -> frozenset[int] | None:
    """Vertices of a connected subgraph with |E| = |V| + 1 built from a BFS tree at ``root``."""
    parent = {root: None}
    queue = deque([root])
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in sorted(H.adj(v)):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    non_tree = [(u, w) for u, w in H.edges() if parent.get(w) != u and parent.get(u) != w]
    if len(non_tree) < 2:
        return None

    def path(v):
        out = []
        while v is not None:
            out.append(v)
            v = parent[v]
        return out

    best = None
    for i in range(len(non_tree)):
        for j in range(i + 1, len(non_tree)):
            verts = set()
            tree_edges = set()
            for u, w in (non_tree[i], non_tree[j]):
                for end in (u, w):
                    p = path(end)
                    verts.update(p)
                    tree_edges.update(zip(p, p[1:]))
            sub = Graph(verts, list(tree_edges) + [non_tree[i], non_tree[j]])
            core = _strip_leaves(sub)
            if best is None or (len(core), sorted(core)) < (len(best), sorted(best)):
                best = core
    return best


def find_obstruction(G: Graph) -> frozenset[int] | None:
    """A small vertex set every modulator must hit, or ``None`` if ``G`` is a pseudoforest.

    The set spans a connected subgraph with one more edge than vertices: two
    cycles joined by a path, or a theta graph.
    """
    comp = _overfull_component(G)
    if comp is None:
        return None
    H = G.induced(comp)
    H = H.induced(_strip_leaves(H))
    best = None
    for root in sorted(H.vertices):
        w = _witness_from_root(H, root)
        if w is not None and (best is None or (len(w), sorted(w)) < (len(best), sorted(best))):
            best = w
    return best


def find_modulator_exact(G: Graph, max_size: int) -> ModulatorResult | None:
    """Smallest modulator of size at most ``max_size``; ties go to the lexicographically first set."""
    if max_size < 0:
        raise ValueError("max_size must be non-negative")

    def search(H: Graph, budget: int, chosen: tuple[int, ...], found: set):
        W = find_obstruction(H)
        if W is None:
            found.add(tuple(sorted(chosen)))
            return
        if budget == 0:
            return
        for v in sorted(W):
            search(H.delete({v}), budget - 1, chosen + (v,), found)

    for size in range(max_size + 1):
        found: set[tuple[int, ...]] = set()
        search(G, size, (), found)
        if found:
            best = min(found, key=lambda s: (len(s), s))
            return ModulatorResult(frozenset(best), EXACT, True)
    return None


def find_modulator_greedy(G: Graph) -> ModulatorResult:
    X: set[int] = set()
    H = G
    while True:
        comp = _overfull_component(H)
        if comp is None:
            return ModulatorResult(frozenset(X), GREEDY, False)
        v = max(sorted(comp), key=lambda u: H.degree(u))
        X.add(v)
        H = H.delete({v})
