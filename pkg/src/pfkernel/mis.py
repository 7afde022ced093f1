"""Exact independence numbers on trees, paths, cycles and pseudoforests.

Everything here runs in linear time per component. A forbidden set ``Z`` marks
vertices that may not be chosen, which is the same as computing on ``G - Z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphError
from .pseudoforest import (
    NotAPseudoforest,
    RootedTree,
    decompose_pseudotree,
    find_unique_cycle,
)

# inc(a) for a forbidden vertex; kept out of integer arithmetic entirely
IMPOSSIBLE = None


@dataclass
class AlphaEntry:
    inc: int | None
    exc: int

    @property
    def alpha(self) -> int:
        return self.exc if self.inc is IMPOSSIBLE else max(self.inc, self.exc)

    @property
    def critical(self) -> bool:
        return self.inc is not IMPOSSIBLE and self.inc > self.exc


AlphaTable = dict[int, AlphaEntry]


def alpha_tree(T: RootedTree, Z: Iterable[int] = ()) -> tuple[int, AlphaTable]:
    """alpha(T - Z) together with the per-vertex table.

    ``table[a].critical`` tells whether ``a`` is alpha-critical in ``T_a - Z``,
    i.e. whether it lies in every maximum independent set of its subtree.
    """
    Z = frozenset(Z)
    table: AlphaTable = {}
    for a in T.postorder():
        kids = [table[b] for b in T.children[a]]
        exc = sum(e.alpha for e in kids)
        inc = IMPOSSIBLE if a in Z else 1 + sum(e.exc for e in kids)
        table[a] = AlphaEntry(inc, exc)
    return table[T.root].alpha, table


def _tree_extract(T: RootedTree, table: AlphaTable, out: list[int]) -> None:
    # ties go to excluding the vertex
    stack = [(T.root, False)]
    while stack:
        a, parent_taken = stack.pop()
        take = not parent_taken and table[a].critical
        if take:
            out.append(a)
        stack.extend((b, take) for b in T.children[a])


def _segments(C: list[int], cyclic: bool, forbidden: frozenset[int]) -> list[list[int]]:
    if cyclic:
        cut = next((i for i, c in enumerate(C) if c in forbidden), None)
        if cut is None:
            return [list(C)]
        C = C[cut:] + C[:cut]
    segs, cur = [], []
    for c in C:
        if c in forbidden:
            if cur:
                segs.append(cur)
            cur = []
        else:
            cur.append(c)
    if cur:
        segs.append(cur)
    return segs


def _path_cycle_solve(C: list[int], cyclic: bool, forbidden: Iterable[int]) -> list[int]:
    if cyclic and len(C) < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    forbidden = frozenset(forbidden)
    if cyclic and not forbidden & set(C):
        return C[0:len(C) - 1:2]
    out = []
    for seg in _segments(C, cyclic, forbidden):
        out.extend(seg[::2])
    return out


def alpha_path_cycle(C: list[int], cyclic: bool, forbidden: Iterable[int] = ()) -> int:
    """alpha of the path (or cycle) ``C`` once ``forbidden`` vertices are removed."""
    return len(_path_cycle_solve(C, cyclic, forbidden))


def _solve_pseudotree(P: Graph, Z: frozenset[int]) -> list[int]:
    """Greedy maximum independent set of ``P - Z`` for a connected pseudotree."""
    cycle = find_unique_cycle(P)
    if not cycle:
        T = RootedTree.from_graph(P, min(P.vertices))
        _, table = alpha_tree(T, Z)
        out: list[int] = []
        _tree_extract(T, table, out)
        return out
    dec = decompose_pseudotree(P)
    out = []
    blocked = set()
    for att in dec.attached:
        _, table = alpha_tree(att.tree, Z)
        _tree_extract(att.tree, table, out)
        if table[att.root].critical:
            blocked.add(att.attachment)
    out.extend(_path_cycle_solve(dec.cycle, True, Z | blocked))
    return out


def _components(F: Graph) -> list[Graph]:
    comps = []
    for comp in F.connected_components():
        sub = F.induced(comp)
        if sub.num_edges() > len(comp):
            raise NotAPseudoforest(f"component containing {min(comp)} has two cycles")
        comps.append(sub)
    return comps


def alpha_pseudotree(P: Graph, Z: Iterable[int] = ()) -> int:
    if not (len(P) and P.is_connected() and P.num_edges() <= len(P)):
        raise NotAPseudoforest("expected a connected pseudotree")
    return len(_solve_pseudotree(P, frozenset(Z)))


def mis_pseudoforest_avoiding(F: Graph, Z: Iterable[int] = ()) -> frozenset[int]:
    """A maximum independent set of ``F - Z``."""
    Z = frozenset(Z)
    out: list[int] = []
    for P in _components(F):
        out.extend(_solve_pseudotree(P, Z))
    return frozenset(out)


def alpha_pseudoforest(F: Graph, Z: Iterable[int] = ()) -> int:
    return len(mis_pseudoforest_avoiding(F, Z))


def conflicts(G: Graph, F_part: Graph, X_part: Iterable[int]) -> int:
    """Conf: alpha(F') - alpha(F' - N_G(X')), the price in ``F_part`` of taking ``X_part``."""
    X_part = frozenset(X_part)
    overlap = X_part & F_part.vertices
    if overlap:
        raise GraphError(f"modulator part overlaps the pseudoforest part at {sorted(overlap)}")
    hit = G.neighborhood(X_part) & F_part.vertices
    if not hit:
        return 0
    return alpha_pseudoforest(F_part) - alpha_pseudoforest(F_part, hit)


class ObstructionNotFound(AssertionError):
    """No obstruction of the requested size exists; a counterexample to the size bound."""

    def __init__(self, P: Graph, Z: frozenset[int], size: int):
        self.graph, self.forbidden, self.size = P, Z, size
        super().__init__(
            f"no obstruction of size {size}: edges={P.edges()} Z={sorted(Z)}"
        )


def find_small_obstruction(P: Graph, Z: Iterable[int], size: int = 3) -> tuple[int, ...] | None:
    """Search for ``size`` vertices of ``Z`` (repeats allowed) that already lower alpha(P).

    Returns ``None`` when ``Z`` does not lower alpha at all. Witnesses with
    fewer distinct vertices are tried first.
    """
    if not (len(P) and P.is_connected() and P.num_edges() <= len(P)):
        raise NotAPseudoforest("expected a connected pseudotree")
    Z = frozenset(Z) & P.vertices
    base = len(_solve_pseudotree(P, frozenset()))
    if base == len(_solve_pseudotree(P, Z)):
        return None
    pool = sorted(Z)
    for distinct in range(1, size + 1):
        for picked in combinations(pool, distinct):
            if len(_solve_pseudotree(P, frozenset(picked))) < base:
                return picked + (picked[-1],) * (size - distinct)
    raise ObstructionNotFound(P, Z, size)


def check_small_obstruction(P: Graph, Z: Iterable[int]) -> tuple[int, int, int] | None:
    return find_small_obstruction(P, Z, 3)
