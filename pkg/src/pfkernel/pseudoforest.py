"""Pseudoforest recognition, unique-cycle extraction and attached-tree decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError


class NotAPseudoforest(GraphError):
    pass


def _component_counts(G: Graph):
    for comp in G.connected_components():
        m = sum(len(G.adj(v)) for v in comp) // 2
        yield comp, m


def is_pseudoforest(G: Graph) -> bool:
    return all(m <= len(comp) for comp, m in _component_counts(G))


def is_forest(G: Graph) -> bool:
    return all(m == len(comp) - 1 for comp, m in _component_counts(G))


def is_pseudotree(G: Graph) -> bool:
    return len(G) > 0 and G.is_connected() and G.num_edges() <= len(G)


def is_mock_forest(G: Graph) -> bool:
    """True iff no two cycles of ``G`` share a vertex.

    Every block must be a bridge or a chordless cycle, and no vertex may lie
    on two cyclic blocks.
    """
    for block in _biconnected_blocks(G):
        if len(block) <= 2:
            continue
        n_edges = sum(len(G.adj(v) & block) for v in block) // 2
        if n_edges != len(block):
            return False
    on_cycle: dict[int, int] = {}
    for i, block in enumerate(_biconnected_blocks(G)):
        if len(block) <= 2:
            continue
        for v in block:
            if v in on_cycle:
                return False
            on_cycle[v] = i
    return True


def _biconnected_blocks(G: Graph) -> list[frozenset[int]]:
    # iterative Hopcroft-Tarjan over an explicit edge stack
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks = []
    counter = 0
    for s in G:
        if s in disc:
            continue
        disc[s] = low[s] = counter
        counter += 1
        stack = [(s, None, iter(sorted(G.adj(s))))]
        edge_stack: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(sorted(G.adj(w)))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = set()
                    while True:
                        a, b = edge_stack.pop()
                        block.update((a, b))
                        if (a, b) == (parent, v):
                            break
                    blocks.append(frozenset(block))
    return blocks


@dataclass
class RootedTree:
    root: int
    parent: dict[int, int | None]
    children: dict[int, list[int]]

    @classmethod
    def from_graph(cls, T: Graph, root: int) -> RootedTree:
        """Root the tree ``T`` at ``root``; children are listed in id order."""
        if root not in T:
            raise GraphError(f"root {root} not in tree")
        parent: dict[int, int | None] = {root: None}
        children: dict[int, list[int]] = {}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            kids = []
            for w in sorted(T.adj(v)):
                if w == parent[v]:
                    continue
                if w in parent:
                    raise GraphError("graph is not a tree (cycle found)")
                parent[w] = v
                kids.append(w)
                queue.append(w)
            children[v] = kids
        if len(parent) != len(T):
            raise GraphError("graph is not a tree (disconnected)")
        return cls(root, parent, children)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.parent)

    def postorder(self) -> list[int]:
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(self.children[v])
        order.reverse()
        return order

    def subtree(self, a: int) -> frozenset[int]:
        out = []
        stack = [a]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(self.children[v])
        return frozenset(out)


@dataclass
class AttachedTree:
    attachment: int
    root: int
    tree: RootedTree


@dataclass
class PseudotreeDecomposition:
    cycle: list[int]
    attached: list[AttachedTree] = field(default_factory=list)


def _strip_leaves(G: Graph) -> frozenset[int]:
    """Vertex set of the 2-core."""
    deg = {v: G.degree(v) for v in G.vertices}
    alive = set(deg)
    queue = deque(v for v, d in deg.items() if d <= 1)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for w in G.adj(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return frozenset(alive)


def _canonical_cycle(G: Graph, core: frozenset[int]) -> list[int]:
    start = min(core)
    nbrs = sorted(G.adj(start) & core)
    cycle = [start]
    prev, cur = start, nbrs[0]
    while cur != start:
        cycle.append(cur)
        nxt = [w for w in G.adj(cur) & core if w != prev]
        prev, cur = cur, nxt[0]
    return cycle


def find_unique_cycle(P: Graph) -> list[int]:
    """The cycle of a connected pseudotree in canonical order, or ``[]`` for a tree.

    The list starts at the smallest cycle vertex and continues toward its
    smaller-id cycle neighbor.
    """
    if len(P) == 0 or not P.is_connected():
        raise NotAPseudoforest("expected a connected graph")
    m = P.num_edges()
    if m > len(P):
        raise NotAPseudoforest("graph has more than one cycle")
    if m == len(P) - 1:
        return []
    return _canonical_cycle(P, _strip_leaves(P))


def decompose_pseudotree(P: Graph) -> PseudotreeDecomposition:
    cycle = find_unique_cycle(P)
    if not cycle:
        raise NotAPseudoforest("pseudotree has no cycle; handle trees separately")
    on_cycle = frozenset(cycle)
    rest = P.delete(on_cycle)
    attached = []
    for comp in rest.connected_components():
        contacts = [(c, r) for r in sorted(comp) for c in sorted(P.adj(r) & on_cycle)]
        # a second contact would close another cycle
        assert len(contacts) == 1, contacts
        c, r = contacts[0]
        attached.append(AttachedTree(c, r, RootedTree.from_graph(rest.induced(comp), r)))
    position = {c: i for i, c in enumerate(cycle)}
    attached.sort(key=lambda t: (position[t.attachment], t.root))
    return PseudotreeDecomposition(cycle, attached)


def select_cycle_breakers(F: Graph) -> frozenset[int]:
    """One vertex (the canonical cycle start) from every cyclic component of ``F``."""
    breakers = []
    for comp in F.connected_components():
        sub = F.induced(comp)
        m = sub.num_edges()
        if m > len(comp):
            raise NotAPseudoforest(f"component containing {min(comp)} has two cycles")
        if m == len(comp):
            breakers.append(min(_strip_leaves(sub)))
    return frozenset(breakers)
