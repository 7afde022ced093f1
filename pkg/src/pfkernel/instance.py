"""IS/PFM and VC/PFM instances and their on-disk format."""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable

from .graph import Graph, GraphError, dump_dimacs_graph, load_dimacs_graph
from .pseudoforest import is_pseudoforest

IS, VC = "IS", "VC"


class InvalidInstance(GraphError):
    pass


@dataclass(frozen=True)
class Instance:
    """``(G, X, k)`` where ``G - X`` must be a pseudoforest.

    ``trivially_yes`` marks an instance already known to be a yes-instance,
    e.g. an IS instance whose target dropped below zero.
    """

    graph: Graph
    modulator: frozenset[int]
    k: int
    problem: str = IS
    trivially_yes: bool = False

    def __post_init__(self):
        object.__setattr__(self, "modulator", frozenset(self.modulator))
        if self.problem not in (IS, VC):
            raise InvalidInstance(f"unknown problem {self.problem!r}")
        stray = self.modulator - self.graph.vertices
        if stray:
            raise InvalidInstance(f"modulator vertices {sorted(stray)} not in graph")
        if not is_pseudoforest(self.graph.delete(self.modulator)):
            raise InvalidInstance("graph minus modulator is not a pseudoforest")

    @property
    def forest(self) -> Graph:
        return self.graph.delete(self.modulator)

    def evolve(self, **changes) -> Instance:
        return replace(self, **changes)


def convert_vc_is(inst: Instance) -> Instance:
    """Switch between VC target ``k`` and IS target ``|V| - k``; same graph and modulator."""
    n = len(inst.graph)
    if inst.problem == VC:
        return inst.evolve(problem=IS, k=n - inst.k, trivially_yes=inst.trivially_yes or inst.k > n)
    return inst.evolve(problem=VC, k=n - inst.k)


def decide(inst: Instance, budget=None) -> bool:
    """Answer the instance exactly with the exponential oracle."""
    from .oracle import DEFAULT_BUDGET, has_independent_set

    if inst.problem == VC:
        inst = convert_vc_is(inst)
    if inst.trivially_yes:
        return True
    return has_independent_set(inst.graph, inst.k, budget or DEFAULT_BUDGET)


# --- sidecar format ---------------------------------------------------------

def _ids(vs: Iterable[int]) -> str:
    return " ".join(str(v + 1) for v in sorted(vs))


def dump_sidecar(inst: Instance) -> str:
    lines = [
        f"modulator: {_ids(inst.modulator)}".rstrip(),
        f"k: {inst.k}",
        f"problem: {inst.problem}",
    ]
    if inst.trivially_yes:
        lines.append("trivially-yes: true")
    return "\n".join(lines) + "\n"


def parse_sidecar(text: str) -> dict:
    fields: dict = {"modulator": frozenset(), "problem": IS, "trivially_yes": False}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise InvalidInstance(f"line {lineno}: expected 'key: value'")
        key, value = key.strip(), value.strip()
        try:
            if key == "modulator":
                fields["modulator"] = frozenset(int(t) - 1 for t in value.split())
            elif key == "k":
                fields["k"] = int(value)
            elif key == "problem":
                fields["problem"] = value.upper()
            elif key == "trivially-yes":
                fields["trivially_yes"] = value.lower() in ("true", "yes", "1")
            elif key == "label":
                fields.setdefault("labels", {})
                v, role = value.split(None, 1)
                fields["labels"][int(v) - 1] = role
            else:
                raise InvalidInstance(f"line {lineno}: unknown key {key!r}")
        except ValueError:
            raise InvalidInstance(f"line {lineno}: bad value for {key!r}") from None
    if "k" not in fields:
        raise InvalidInstance("sidecar is missing 'k:'")
    if any(v < 0 for v in fields["modulator"]):
        raise InvalidInstance("modulator ids are 1-based")
    return fields


def read_instance(graph_path, sidecar_path) -> Instance:
    G = load_dimacs_graph(Path(graph_path).read_text())
    f = parse_sidecar(Path(sidecar_path).read_text())
    return Instance(G, f["modulator"], f["k"], f["problem"], f["trivially_yes"])


def write_instance(prefix, inst: Instance, comment: str | None = None) -> tuple[Path, Path]:
    """Write ``<prefix>.dimacs`` and ``<prefix>.inst``."""
    prefix = Path(prefix)
    gpath = prefix.with_name(prefix.name + ".dimacs")
    spath = prefix.with_name(prefix.name + ".inst")
    gpath.write_text(dump_dimacs_graph(inst.graph, comment))
    spath.write_text(dump_sidecar(inst))
    return gpath, spath
