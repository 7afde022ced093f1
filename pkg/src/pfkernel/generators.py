"""Seeded random graphs, instances and formulas for property checks."""

from __future__ import annotations

import random

from .gadgets import CnfFormula
from .graph import Graph
from .instance import Instance
from .pseudoforest import RootedTree


def random_tree(n: int, rng: random.Random, start: int = 0) -> Graph:
    """Uniform labelled tree on ``n`` vertices (Pruefer decoding)."""
    vs = list(range(start, start + n))
    if n <= 2:
        return Graph(vs, [(vs[0], vs[1])] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    edges = []
    for s in seq:
        leaf = degree.index(1)
        edges.append((vs[leaf], vs[s]))
        degree[leaf] -= 1
        degree[s] -= 1
    u, w = [i for i in range(n) if degree[i] == 1]
    edges.append((vs[u], vs[w]))
    return Graph(vs, edges)


def random_pseudotree(n: int, rng: random.Random, start: int = 0, p_cycle: float = 0.8) -> Graph:
    T = random_tree(n, rng, start)
    if n < 3 or rng.random() >= p_cycle:
        return T
    vs = sorted(T.vertices)
    while True:
        u, w = rng.sample(vs, 2)
        if not T.has_edge(u, w):
            return T.add_edges([(u, w)])


def random_pseudoforest(n: int, rng: random.Random, start: int = 0, max_part: int = 7) -> Graph:
    vertices, edges = [], []
    v = start
    while v < start + n:
        size = rng.randint(1, min(max_part, start + n - v))
        P = random_pseudotree(size, rng, v, p_cycle=0.6)
        vertices += P.vertices
        edges += P.edges()
        v += size
    return Graph(vertices, edges)


def random_rooted_tree(n: int, rng: random.Random) -> RootedTree:
    T = random_tree(n, rng)
    return RootedTree.from_graph(T, rng.randrange(n))


def random_subset(vs, rng: random.Random, p: float) -> frozenset[int]:
    return frozenset(v for v in sorted(vs) if rng.random() < p)


def random_instance(rng: random.Random, max_vertices: int = 18, k: int = 0) -> Instance:
    """Pseudoforest plus a small modulator wired to it at a random density."""
    n = rng.randint(1, max_vertices)
    nx = rng.randint(0, min(5, n))
    F = random_pseudoforest(n - nx, rng)
    X = list(range(n - nx, n))
    p = rng.uniform(0.05, 0.6)
    edges = F.edges()
    for x in X:
        edges += [(x, v) for v in sorted(F.vertices) if rng.random() < p]
    q = rng.uniform(0.0, 0.4)
    edges += [(a, b) for a in X for b in X if a < b and rng.random() < q]
    return Instance(Graph(range(n), edges), frozenset(X), k)


def triple_heavy_instance(rng: random.Random, k: int = 0, max_vertices: int | None = None) -> Instance:
    """Instances where a modulator triple collides with several small components.

    Most components are triangles whose vertices are spread over a triple of
    modulator vertices; one triangle vertex also sees the fourth modulator
    vertex, so no triangle is an anchor triangle. Single and pair conflicts
    stay low while the triple's conflict count reaches |X|: the inputs on
    which the triangle-adding rule fires. ``max_vertices`` caps the size by
    dropping components that would not fit.
    """
    X = [0, 1, 2, 3]
    vid = 4
    vertices, edges = list(X), []
    cap = max_vertices or float("inf")
    for _ in range(rng.randint(4, 6)):
        size = rng.choice((3, 3, 3, 3, 3, 6))
        if vid + size > cap:
            continue
        vs = list(range(vid, vid + size))
        vid += size
        vertices += vs
        edges += [(vs[i], vs[(i + 1) % size]) for i in range(size)]
        order = rng.sample(X, 4)
        edges += [(v, order[i % 3]) for i, v in enumerate(vs)]
        if size == 3:
            edges.append((rng.choice(vs), order[3]))
    room = min(4, cap - vid)
    if room >= 1 and rng.random() < 0.5:
        # an unrelated tree hanging off one modulator vertex
        T = random_tree(rng.randint(1, room), rng, vid)
        vertices += T.vertices
        edges += T.edges() + [(vid, rng.choice(X))]
    return Instance(Graph(vertices, edges), frozenset(X), k)


def pair_heavy_instance(rng: random.Random, k: int = 0, max_vertices: int | None = None) -> Instance:
    """Instances where a modulator pair conflicts on many small components.

    Each component is a short path or cycle whose ends see two different
    modulator vertices, so either vertex alone costs nothing while the pair
    together costs one per component. ``max_vertices`` caps the size.
    """
    nx = rng.randint(2, 4)
    X = list(range(nx))
    vid = nx
    vertices, edges = list(X), []
    cap = max_vertices or float("inf")
    for _ in range(rng.randint(nx, nx + 3)):
        size = rng.choice((2, 2, 3, 4))
        if vid + size > cap:
            continue
        vs = list(range(vid, vid + size))
        vid += size
        vertices += vs
        edges += list(zip(vs, vs[1:]))
        if size == 4 and rng.random() < 0.5:
            edges.append((vs[0], vs[-1]))
        a, b = rng.sample(X, 2)
        edges += [(vs[0], a), (vs[-1], b)]
        if rng.random() < 0.3:
            edges.append((rng.choice(vs), rng.choice(X)))
    edges += [(a, b) for a in X for b in X if a < b and rng.random() < 0.15]
    return Instance(Graph(vertices, sorted(set(tuple(sorted(e)) for e in edges))), frozenset(X), k)


def random_cnf(rng: random.Random, max_vars: int = 8, max_clauses: int = 6, max_len: int = 3) -> CnfFormula:
    n = rng.randint(1, max_vars)
    m = rng.randint(1, max_clauses)
    clauses = []
    for _ in range(m):
        length = rng.randint(1, max_len)
        clauses.append(tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(length)))
    return CnfFormula(n, tuple(clauses))
