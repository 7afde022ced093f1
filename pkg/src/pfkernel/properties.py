"""Randomized property suites comparing the MIS engine and gadgets against the oracle.

Every suite draws from one seeded ``random.Random`` and stops at the first
counterexample, which it reports as text.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from . import mis
from .gadgets import clause_gadget, cnf_to_ismfm, spikes
from .generators import (
    random_cnf,
    random_pseudotree,
    random_rooted_tree,
    random_subset,
    random_tree,
)
from .graph import Graph
from .oracle import OracleBudget, alpha_exact, has_independent_set

BIG = OracleBudget(max_vertices=120, max_nodes=2_000_000)


@dataclass
class SuiteResult:
    name: str
    trials: int
    checked: int = 0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} checked / {self.trials} trials"


def _alpha(G: Graph) -> int:
    return alpha_exact(G, BIG)


def _describe(G: Graph, **extra) -> str:
    parts = [f"vertices={sorted(G.vertices)}", f"edges={G.edges()}"]
    parts += [f"{k}={sorted(v) if isinstance(v, (set, frozenset)) else v}" for k, v in extra.items()]
    return " ".join(parts)


def suite_alg1(trials: int, rng: random.Random) -> SuiteResult:
    """Greedy pseudotree MIS against the oracle."""
    res = SuiteResult("alg1", trials)
    for _ in range(trials):
        P = random_pseudotree(rng.randint(1, 14), rng)
        Z = random_subset(P.vertices, rng, rng.uniform(0, 0.5))
        got, want = mis.alpha_pseudotree(P, Z), _alpha(P.delete(Z))
        res.checked += 1
        if got != want:
            res.counterexample = _describe(P, Z=Z, engine=got, oracle=want)
            break
    return res


def suite_lemma6(trials: int, rng: random.Random) -> SuiteResult:
    """Small obstructions: a triple on pseudotrees, a pair on trees."""
    res = SuiteResult("lemma6", trials)
    for t in range(trials):
        tree_case = t % 4 == 0
        n = rng.randint(1, 16)
        P = random_tree(n, rng) if tree_case else random_pseudotree(n, rng)
        Z = random_subset(P.vertices, rng, rng.uniform(0.1, 0.6))
        base = _alpha(P)
        dropped = base > _alpha(P.delete(Z))
        size = 2 if tree_case else 3
        try:
            w = mis.find_small_obstruction(P, Z, size)
        except mis.ObstructionNotFound:
            w = "not found"
        if not dropped:
            if w is not None:
                res.counterexample = _describe(P, Z=Z, witness=w, note="no drop but witness returned")
                break
            continue
        res.checked += 1
        if not isinstance(w, tuple) or not set(w) <= Z or _alpha(P.delete(w)) >= base:
            res.counterexample = _describe(P, Z=Z, witness=w, size=size)
            break
    return res


def suite_lemma4(trials: int, rng: random.Random) -> SuiteResult:
    """A vertex is critical in its subtree iff none of its children is critical in theirs."""
    res = SuiteResult("lemma4", trials)
    for _ in range(trials):
        T = random_rooted_tree(rng.randint(1, 20), rng)
        G = Graph(T.vertices, [(v, p) for v, p in T.parent.items() if p is not None])
        _, table = mis.alpha_tree(T)
        for a in T.vertices:
            sub = G.induced(T.subtree(a))
            crit_oracle = _alpha(sub) == 1 + _alpha(sub.delete({a}))
            rule = all(not table[b].critical for b in T.children[a])
            if not (table[a].critical == crit_oracle == rule):
                res.counterexample = _describe(G, root=T.root, vertex=a, table=table[a].critical,
                                               oracle=crit_oracle, children_rule=rule)
                return res
        res.checked += 1
    return res


def suite_obs2(trials: int, rng: random.Random) -> SuiteResult:
    """critical(v) iff alpha(T_v - v) == alpha(T_v - N[v])."""
    res = SuiteResult("obs2", trials)
    for _ in range(trials):
        T = random_rooted_tree(rng.randint(1, 20), rng)
        G = Graph(T.vertices, [(v, p) for v, p in T.parent.items() if p is not None])
        _, table = mis.alpha_tree(T)
        for v in sorted(T.vertices):
            sub = G.induced(T.subtree(v))
            eq = _alpha(sub.delete({v})) == _alpha(sub.delete(sub.closed_neighborhood({v})))
            if table[v].critical != eq:
                res.counterexample = _describe(G, root=T.root, vertex=v, table=table[v].critical, oracle=eq)
                return res
        res.checked += 1
    return res


def suite_obs4(trials: int, rng: random.Random) -> SuiteResult:
    """A conflicting independent modulator part contains a conflicting part of size <= 3."""
    res = SuiteResult("obs4", trials)
    for _ in range(trials):
        n = rng.randint(1, 12)
        P = random_pseudotree(n, rng)
        X = list(range(n, n + rng.randint(1, 5)))
        edges = P.edges()
        for x in X:
            edges += [(x, v) for v in sorted(P.vertices) if rng.random() < 0.25]
        G = Graph(P.vertices | set(X), edges)
        conf = mis.conflicts(G, P, X)
        oracle_conf = _alpha(P) - _alpha(P.delete(G.neighborhood(X)))
        if conf != oracle_conf:
            res.counterexample = _describe(G, X=set(X), engine=conf, oracle=oracle_conf)
            break
        if conf == 0:
            continue
        res.checked += 1
        small = next((s for r in (1, 2, 3) for s in combinations(X, r) if mis.conflicts(G, P, s) > 0), None)
        if small is None:
            res.counterexample = _describe(G, X=set(X), note="no conflicting part of size <= 3")
            break
    return res


def all_maximum_independent_sets(G: Graph) -> list[frozenset[int]]:
    """Every maximum independent set, by exhaustive search (small graphs only)."""
    target = _alpha(G)
    order = sorted(G.vertices)
    out = []

    def grow(i, chosen, blocked):
        if len(chosen) + (len(order) - i) < target:
            return
        if len(chosen) == target:
            out.append(frozenset(chosen))
            return
        v = order[i]
        if v not in blocked:
            grow(i + 1, chosen + [v], blocked | G.adj(v))
        grow(i + 1, chosen, blocked)

    grow(0, [], frozenset())
    return out


def suite_gadgets(trials: int, rng: random.Random) -> SuiteResult:
    """Gadget independence numbers, spike structure of maximum sets, and SAT equivalence."""
    res = SuiteResult("gadgets", trials)
    if trials == 0:
        return res
    for k in range(1, 9):
        G, labels = clause_gadget(k)
        if _alpha(G) != k + 2:
            res.counterexample = f"alpha(G_{k}) = {_alpha(G)} != {k + 2}"
            return res
        if _alpha(G.delete(spikes(labels))) != k + 1:
            res.counterexample = f"spike-free G_{k} does not have alpha {k + 1}"
            return res
    for k in range(1, 7):
        G, labels = clause_gadget(k)
        S = set(spikes(labels))
        sets = all_maximum_independent_sets(G)
        if any(not (I & S) for I in sets):
            res.counterexample = f"G_{k}: a maximum independent set without spikes"
            return res
        for s in S:
            if not any(I & S == {s} for I in sets):
                res.counterexample = f"G_{k}: no maximum independent set whose only spike is {s}"
                return res
    res.notes.append("gadget observations hold for k <= 8 / k <= 6")
    for _ in range(trials):
        F = random_cnf(rng)
        gi = cnf_to_ismfm(F)
        sat = F.brute_force_sat()
        yes = has_independent_set(gi.graph, gi.k, BIG)
        res.checked += 1
        if sat != yes:
            res.counterexample = f"cnf={F.clauses} n={F.num_vars} sat={sat} is={yes}"
            break
    return res


SUITES = {
    "alg1": suite_alg1,
    "lemma6": suite_lemma6,
    "lemma4": suite_lemma4,
    "obs2": suite_obs2,
    "obs4": suite_obs4,
    "gadgets": suite_gadgets,
}


def run_suites(names, trials: int, seed: int) -> list[SuiteResult]:
    if "all" in names:
        names = list(SUITES)
    return [SUITES[name](trials, random.Random(f"{seed}:{name}")) for name in names]
