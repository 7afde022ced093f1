"""Reduction rules for IS/PFM, the scheduler that runs them, and solution lifting."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph
from .instance import VC, Instance, convert_vc_is
from .mis import alpha_pseudoforest, mis_pseudoforest_avoiding
from .plugins import PassThroughPlugin, spot_check
from .pseudoforest import select_cycle_breakers
from .trace import ReductionTrace, Rule1, Rule2, Rule3, Rule4, Rule5, Rule6

log = logging.getLogger(__name__)


class LiftError(ValueError):
    pass


class BoundViolation(AssertionError):
    pass


@dataclass(frozen=True)
class Chunk:
    members: tuple[int, ...]


@dataclass(frozen=True)
class AnchorTriangle:
    triangle: tuple[int, int, int]
    anchors: tuple[int, int, int]
    redundant: bool

    @property
    def neighborhood(self) -> frozenset[int]:
        return frozenset(self.anchors)


class Analysis:
    """Per-instance cache of the pseudoforest components and conflict counts.

    Conflicts split over components, so ``Conf_F(X')`` is the sum of
    ``Conf_P(X')`` over the components ``P`` that ``N(X')`` touches.
    """

    def __init__(self, inst: Instance):
        G, X = inst.graph, inst.modulator
        F = G.delete(X)
        self.inst = inst
        self.components = [F.induced(c) for c in F.connected_components()]
        self.alpha = [alpha_pseudoforest(P) for P in self.components]
        self.where = {v: i for i, P in enumerate(self.components) for v in P.vertices}
        self.reach = {x: G.adj(x) - X for x in X}
        self._memo: dict[tuple[int, frozenset[int]], int] = {}

    def conflicts_by_component(self, Xs: Iterable[int]) -> dict[int, int]:
        hit: dict[int, set[int]] = {}
        for x in Xs:
            for v in self.reach[x]:
                hit.setdefault(self.where[v], set()).add(v)
        out = {}
        for i, vs in hit.items():
            key = (i, frozenset(vs))
            if key not in self._memo:
                self._memo[key] = self.alpha[i] - alpha_pseudoforest(self.components[i], vs)
            if self._memo[key]:
                out[i] = self._memo[key]
        return out

    def conflicts(self, Xs: Iterable[int]) -> int:
        return sum(self.conflicts_by_component(Xs).values())


def _independent(G: Graph, vs) -> bool:
    return all(not G.has_edge(u, v) for u, v in combinations(vs, 2))


def enumerate_chunks(inst: Instance, analysis: Analysis | None = None) -> list[Chunk]:
    """Independent subsets of the modulator of size 1..3 with fewer than |X| conflicts."""
    a = analysis or Analysis(inst)
    X, G = sorted(inst.modulator), inst.graph
    out = []
    for size in (1, 2, 3):
        for sub in combinations(X, size):
            if _independent(G, sub) and a.conflicts(sub) < len(X):
                out.append(Chunk(sub))
    return out


def find_anchor_triangles(inst: Instance) -> list[AnchorTriangle]:
    G, X = inst.graph, inst.modulator
    found = []
    for comp in G.delete(X).connected_components():
        if len(comp) != 3:
            continue
        p = tuple(sorted(comp))
        anchors = []
        for v in p:
            inside = G.adj(v) & comp
            outside = G.adj(v) - comp
            if len(inside) != 2 or len(outside) != 1:
                break
            anchors.append(next(iter(outside)))
        else:
            if len(set(anchors)) == 3:
                found.append((p, tuple(anchors)))
    seen = set()
    out = []
    for p, anchors in sorted(found):
        key = frozenset(anchors)
        out.append(AnchorTriangle(p, anchors, redundant=key in seen))
        seen.add(key)
    return out


# --- individual rules --------------------------------------------------------
# Each returns (new instance, trace record) or None when it does not apply.

def apply_rule1(inst: Instance, analysis: Analysis | None = None):
    a = analysis or Analysis(inst)
    size = len(inst.modulator)
    for v in sorted(inst.modulator):
        if a.conflicts((v,)) >= size:
            rec = Rule1(v)
            return rec.apply(inst), rec
    return None


def apply_rule2(inst: Instance, analysis: Analysis | None = None):
    a = analysis or Analysis(inst)
    G, size = inst.graph, len(inst.modulator)
    for u, v in combinations(sorted(inst.modulator), 2):
        if not G.has_edge(u, v) and a.conflicts((u, v)) >= size:
            rec = Rule2(u, v)
            return rec.apply(inst), rec
    return None


def apply_rule3(inst: Instance, next_id: int | None = None, fired: Iterable = (),
                analysis: Analysis | None = None, anchors: list[AnchorTriangle] | None = None):
    """Attach a fresh anchor triangle to the first independent, unanchored,
    high-conflict triple. New ids start at ``next_id`` (default: above every id in the graph)."""
    a = analysis or Analysis(inst)
    G, size = inst.graph, len(inst.modulator)
    if anchors is None:
        anchors = find_anchor_triangles(inst)
    anchored = {t.neighborhood for t in anchors}
    fired = {frozenset(t) for t in fired}
    if next_id is None:
        next_id = G.max_id() + 1
    for triple in combinations(sorted(inst.modulator), 3):
        key = frozenset(triple)
        if key in anchored or key in fired or not _independent(G, triple):
            continue
        if a.conflicts(triple) >= size:
            rec = Rule3(triple, (next_id, next_id + 1, next_id + 2))
            return rec.apply(inst), rec
    return None


def apply_rule4(inst: Instance, chunks: list[Chunk] | None = None,
                anchors: list[AnchorTriangle] | None = None, analysis: Analysis | None = None):
    a = analysis or Analysis(inst)
    if chunks is None:
        chunks = enumerate_chunks(inst, a)
    if anchors is None:
        anchors = find_anchor_triangles(inst)
    keep = {frozenset(t.triangle) for t in anchors if not t.redundant}
    touched = set()
    for ch in chunks:
        touched.update(a.conflicts_by_component(ch.members))
    for i, P in enumerate(a.components):
        if i in touched or P.vertices in keep:
            continue
        rec = Rule4(tuple(sorted(P.vertices)), a.alpha[i])
        return rec.apply(inst), rec
    return None


def apply_rule5(inst: Instance):
    rec = Rule5(tuple(sorted(select_cycle_breakers(inst.forest))))
    return rec.apply(inst), rec


def apply_rule6(inst: Instance, plugin=None, check: bool = True):
    plugin = plugin or PassThroughPlugin()
    out, data = plugin.reduce(inst)
    if check:
        spot_check(inst, out, plugin.name)
    return out, Rule6(plugin.name, data)


# --- scheduler ---------------------------------------------------------------

def reduce_rules_1_to_4(inst: Instance, trace: ReductionTrace | None = None,
                        next_id: int | None = None) -> tuple[Instance, ReductionTrace]:
    """Apply the lowest-numbered applicable rule among 1-4 until none applies."""
    trace = trace if trace is not None else ReductionTrace(problem=inst.problem)
    if next_id is None:
        next_id = inst.graph.max_id() + 1
    fired: set[frozenset[int]] = set()
    while not inst.trivially_yes:
        a = Analysis(inst)
        step = apply_rule1(inst, a) or apply_rule2(inst, a)
        if step is None:
            anchors = find_anchor_triangles(inst)
            step = apply_rule3(inst, next_id, fired, a, anchors)
            if step is not None:
                next_id += 3
                fired.add(frozenset(step[1].triple))
            else:
                step = apply_rule4(inst, enumerate_chunks(inst, a), anchors, a)
        if step is None:
            break
        inst, rec = step
        log.debug("applied %s", rec.to_line())
        trace.records.append(rec)
    return inst, trace


def kernelize(inst: Instance, plugin=None) -> tuple[Instance, ReductionTrace]:
    """Full pipeline: rules 1-4 exhaustively, then rule 5 and rule 6 once each.

    VC instances are solved through the IS form and converted back at the end.
    The rule-6 plugin defaults to pass-through.
    """
    trace = ReductionTrace(problem=inst.problem)
    work = convert_vc_is(inst) if inst.problem == VC else inst
    work, trace = reduce_rules_1_to_4(work, trace)
    if not work.trivially_yes:
        work, rec = apply_rule5(work)
        if rec.breakers:
            trace.records.append(rec)
        work, rec = apply_rule6(work, plugin)
        if rec.data != "pass-through" or rec.plugin != PassThroughPlugin.name:
            trace.records.append(rec)
    if inst.problem == VC:
        work = convert_vc_is(work)
    return work, trace


# --- lifting -----------------------------------------------------------------

def _drop_unnecessary_triples(inst: Instance, I: set[int]) -> None:
    """Swap a triple vertex for its anchor-triangle partner while any anchored triple sits in I."""
    changed = True
    while changed:
        changed = False
        for t in find_anchor_triangles(inst):
            if set(t.anchors) <= I:
                I.discard(t.anchors[0])
                I.add(t.triangle[0])
                changed = True
                break


def lift_solution(original: Instance, trace: ReductionTrace,
                  kernel_solution: Iterable[int]) -> frozenset[int]:
    """Turn a solution of the reduced instance into one of ``original``.

    For VC the solutions are vertex covers, otherwise independent sets.
    """
    from .plugins import get_plugin

    states = trace.replay(original)
    final = states[-1]
    sol = frozenset(kernel_solution)
    if not sol <= final.graph.vertices:
        raise LiftError("solution uses vertices that are not in the reduced graph")
    if original.problem == VC:
        sol = final.graph.vertices - sol
    if not final.graph.is_independent(sol):
        raise LiftError("kernel solution is not " + ("a vertex cover" if original.problem == VC else "independent"))
    if len(sol) < final.k:
        raise LiftError(f"kernel solution has size {len(sol)} < k' = {final.k}")

    I = set(sol)
    for rec, before in zip(reversed(trace.records), reversed(states[:-1])):
        if isinstance(rec, Rule6):
            after = rec.apply(before)
            if not after.graph.is_independent(I):
                raise LiftError("solution broken before rule-6 lift")
            I = set(get_plugin(rec.plugin).lift(before, rec.data, frozenset(I)))
        elif isinstance(rec, Rule3):
            I -= set(rec.triangle)
        elif isinstance(rec, Rule4):
            after = rec.apply(before)
            _drop_unnecessary_triples(after, I)
            P = before.graph.induced(rec.component)
            blocked = before.graph.neighborhood(I) & P.vertices if I else frozenset()
            extra = mis_pseudoforest_avoiding(P, blocked)
            if len(extra) < rec.alpha:
                raise LiftError(f"could not re-extend component {rec.to_line()}")
            I |= extra
        # rules 1, 2 and 5 need nothing: the solution stays valid in the earlier graph
    G = original.graph
    if not G.is_independent(I):
        raise LiftError("lifted set is not independent (engine bug)")
    if original.problem == VC:
        return G.vertices - I
    return frozenset(I)


# --- size bookkeeping --------------------------------------------------------

@dataclass
class BoundCheck:
    name: str
    value: int
    bound: int | None
    status: str  # "pass", "fail" or "skipped"

    def line(self) -> str:
        if self.status == "skipped":
            return f"{self.name}: skipped"
        return f"{self.name}: {self.value} <= {self.bound} {self.status}"


STAGES = ("rules1-4", "rule5", "rule6")


def verify_size_bounds(original_X_size: int, reduced: Instance, stage: str,
                       original_k: int | None = None, plugin_compliant: bool = False,
                       strict: bool = True) -> list[BoundCheck]:
    """Check the polynomial size guarantees that apply at ``stage``.

    ``reduced`` must be in IS form. With ``strict`` a violated bound raises
    :class:`BoundViolation`.
    """
    if stage not in STAGES:
        raise ValueError(f"stage must be one of {STAGES}")
    x = original_X_size
    x_after5 = x**4 + x**3 + x
    checks = []

    def add(name, value, bound):
        checks.append(BoundCheck(name, value, bound, "pass" if value <= bound else "fail"))

    if stage == "rules1-4":
        add("components of F", len(reduced.forest.connected_components()), x**4 + x**3)
    elif stage == "rule5":
        add("|X'| after rule 5", len(reduced.modulator), x_after5)
    else:
        if plugin_compliant:
            add("|X'| after rule 6", len(reduced.modulator), 2 * x_after5)
            add("|V'| after rule 6", len(reduced.graph),
                56 * x_after5**3 + 28 * x_after5**2 + 2 * x_after5)
        else:
            checks.append(BoundCheck("|V'| after rule 6", len(reduced.graph), None, "skipped"))
    if original_k is not None:
        add("k' - k", reduced.k - original_k, x**3)
    if strict:
        bad = [c for c in checks if c.status == "fail"]
        if bad:
            raise BoundViolation("; ".join(c.line() for c in bad))
    return checks


def stage_instances(original: Instance, trace: ReductionTrace) -> dict[str, Instance]:
    """The IS-form instance after rules 1-4, after rule 5, and at the end."""
    states = trace.replay(original)
    late = [i for i, rec in enumerate(trace.records) if isinstance(rec, (Rule5, Rule6))]
    idx = late[0] if late else len(trace.records)
    after5 = states[idx]
    for i, rec in enumerate(trace.records):
        if isinstance(rec, Rule5):
            after5 = states[i + 1]
    return {"rules1-4": states[idx], "rule5": after5, "rule6": states[-1]}


def verify_all_bounds(original: Instance, trace: ReductionTrace, plugin_compliant: bool = False,
                      strict: bool = True) -> list[BoundCheck]:
    """Every size check for a finished run, in stage order.

    The parameter check takes the largest k seen in any intermediate state.
    """
    base = convert_vc_is(original) if original.problem == VC else original
    x = len(base.modulator)
    stages = stage_instances(original, trace)
    checks = []
    for stage in STAGES:
        inst = stages[stage]
        if inst.trivially_yes:
            # the run halted early; only the parameter growth is meaningful
            checks.append(BoundCheck(f"stage {stage} (trivially yes)", 0, None, "skipped"))
            continue
        checks += verify_size_bounds(x, inst, stage, None, plugin_compliant, strict=False)
    grow = max(s.k for s in trace.replay(original)) - base.k
    checks.append(BoundCheck("k' - k", grow, x**3, "pass" if grow <= x**3 else "fail"))
    if strict:
        bad = [c for c in checks if c.status == "fail"]
        if bad:
            raise BoundViolation("; ".join(c.line() for c in bad))
    return checks
