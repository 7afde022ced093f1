"""Final-stage plugins run once the modulator is a feedback vertex set.

A plugin turns an IS instance with a feedback-vertex-set modulator into an
equivalent (ideally smaller) one. It serializes whatever it needs for lifting
into a single text field of the trace, and must be able to replay itself from
that field. ``compliant`` claims the cubic size guarantee of a full
IS/FVS kernel; only then are the final vertex bounds asserted.
"""

from __future__ import annotations

from .instance import Instance
from .oracle import OracleBudget, OracleBudgetExceeded, has_independent_set


class PluginRejected(RuntimeError):
    pass


class PassThroughPlugin:
    name = "pass-through"
    compliant = False

    def reduce(self, inst: Instance) -> tuple[Instance, str]:
        return inst, "pass-through"

    def replay(self, inst: Instance, data: str) -> tuple[Instance, str]:
        return inst, data

    def lift(self, before: Instance, data: str, solution: frozenset[int]) -> frozenset[int]:
        return frozenset(solution)


class DegreeOnePlugin:
    """Take every vertex of degree at most one into the solution, repeatedly."""

    name = "degree-one"
    compliant = False

    def reduce(self, inst: Instance) -> tuple[Instance, str]:
        g, X, k = inst.graph, inst.modulator, inst.k
        taken = []
        while True:
            v = next((v for v in g if g.degree(v) <= 1), None)
            if v is None:
                break
            taken.append(v)
            gone = g.closed_neighborhood({v})
            g, X, k = g.delete(gone), X - gone, k - 1
        return inst.evolve(graph=g, modulator=X, k=k), " ".join(str(v + 1) for v in taken)

    def replay(self, inst: Instance, data: str) -> tuple[Instance, str]:
        g, X, k = inst.graph, inst.modulator, inst.k
        for tok in data.split():
            v = int(tok) - 1
            if v not in g or g.degree(v) > 1:
                raise PluginRejected(f"degree-one replay: vertex {tok} is not a leaf")
            gone = g.closed_neighborhood({v})
            g, X, k = g.delete(gone), X - gone, k - 1
        return inst.evolve(graph=g, modulator=X, k=k), data

    def lift(self, before: Instance, data: str, solution: frozenset[int]) -> frozenset[int]:
        return frozenset(solution) | {int(t) - 1 for t in data.split()}


PLUGINS = {p.name: p for p in (PassThroughPlugin, DegreeOnePlugin)}


def register_plugin(cls) -> None:
    PLUGINS[cls.name] = cls


def get_plugin(name: str):
    try:
        return PLUGINS[name]()
    except KeyError:
        raise PluginRejected(f"unknown plugin {name!r}; known: {sorted(PLUGINS)}") from None


SPOT_CHECK_BUDGET = OracleBudget(max_vertices=40, max_nodes=200_000)


def spot_check(before: Instance, after: Instance, name: str) -> None:
    """Compare yes/no answers with the oracle when both instances are small enough."""
    if before.trivially_yes or after.trivially_yes:
        return
    try:
        a = has_independent_set(before.graph, before.k, SPOT_CHECK_BUDGET)
        b = has_independent_set(after.graph, after.k, SPOT_CHECK_BUDGET)
    except OracleBudgetExceeded:
        return
    if a != b:
        raise PluginRejected(
            f"plugin {name!r} changed the answer ({'yes' if a else 'no'} -> {'yes' if b else 'no'})"
        )
