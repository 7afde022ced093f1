"""Exponential-time maximum independent set, used as ground truth.

Branch and bound over bitsets: pendant/isolated vertices are taken greedily,
disconnected pieces are solved separately, and each connected piece branches
on a maximum-degree vertex with a greedy clique cover as the upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


class OracleBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 25
    max_nodes: int = 5_000_000

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_nodes <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = OracleBudget()


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Solver:
    def __init__(self, G: Graph, budget: OracleBudget):
        if len(G) > budget.max_vertices:
            raise OracleBudgetExceeded(
                f"{len(G)} vertices exceeds oracle budget of {budget.max_vertices}"
            )
        self.order = sorted(G.vertices)
        index = {v: i for i, v in enumerate(self.order)}
        self.nbr = [0] * len(self.order)
        for v in self.order:
            m = 0
            for w in G.adj(v):
                m |= 1 << index[w]
            self.nbr[index[v]] = m
        self.nodes = 0
        self.max_nodes = budget.max_nodes

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise OracleBudgetExceeded(f"search exceeded {self.max_nodes} nodes")

    def component(self, mask: int) -> int:
        low = mask & -mask
        comp = frontier = low
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= self.nbr[i]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        return comp

    def clique_cover_bound(self, mask: int) -> int:
        cliques: list[int] = []
        for i in _bits(mask):
            for j, c in enumerate(cliques):
                if c & ~self.nbr[i] == 0:
                    cliques[j] = c | (1 << i)
                    break
            else:
                cliques.append(1 << i)
        return len(cliques)

    def greedy(self, mask: int) -> int:
        chosen = 0
        while mask:
            i = min(_bits(mask), key=lambda i: ((self.nbr[i] & mask).bit_count(), i))
            chosen |= 1 << i
            mask &= ~(self.nbr[i] | (1 << i))
        return chosen

    def solve(self, mask: int) -> int:
        """Bitmask of a maximum independent set inside ``mask``."""
        self._tick()
        chosen = 0
        changed = True
        while changed and mask:
            changed = False
            for i in _bits(mask):
                if mask >> i & 1 and (self.nbr[i] & mask).bit_count() <= 1:
                    chosen |= 1 << i
                    mask &= ~(self.nbr[i] | (1 << i))
                    changed = True
        while mask:
            comp = self.component(mask)
            mask &= ~comp
            chosen |= self._solve_connected(comp)
        return chosen

    def _solve_connected(self, mask: int) -> int:
        best = [self.greedy(mask)]

        def branch(mask: int, cur: int) -> None:
            self._tick()
            size = cur.bit_count()
            if mask == 0:
                if size > best[0].bit_count():
                    best[0] = cur
                return
            if size + self.clique_cover_bound(mask) <= best[0].bit_count():
                return
            if self.component(mask) != mask:
                cand = cur | self.solve(mask)
                if cand.bit_count() > best[0].bit_count():
                    best[0] = cand
                return
            v = max(_bits(mask), key=lambda i: ((self.nbr[i] & mask).bit_count(), -i))
            branch(mask & ~(self.nbr[v] | (1 << v)), cur | (1 << v))
            branch(mask & ~(1 << v), cur)

        branch(mask, 0)
        return best[0]

    def to_set(self, mask: int) -> frozenset[int]:
        return frozenset(self.order[i] for i in _bits(mask))


def max_independent_set(G: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> frozenset[int]:
    s = _Solver(G, budget)
    return s.to_set(s.solve((1 << len(s.order)) - 1))


def alpha_exact(G: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return len(max_independent_set(G, budget))


def has_independent_set(G: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    if k <= 0:
        return True
    s = _Solver(G, budget)
    full = (1 << len(s.order)) - 1
    if s.greedy(full).bit_count() >= k:
        return True
    if s.clique_cover_bound(full) < k:
        return False
    return s.solve(full).bit_count() >= k


def min_vertex_cover_size(G: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return len(G) - alpha_exact(G, budget)
