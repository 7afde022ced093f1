"""Reduction trace records, their text form, and forward replay."""

from __future__ import annotations

from dataclasses import dataclass, field

from .instance import IS, VC, Instance, InvalidInstance, convert_vc_is

HEADER = "pfkernel-trace 1"


class TraceError(ValueError):
    pass


def _fmt(vs) -> str:
    return " ".join(str(v + 1) for v in vs)


def _parse_ids(tokens: list[str]) -> list[int]:
    return [int(t) - 1 for t in tokens]


@dataclass(frozen=True)
class Rule1:
    vertex: int

    def apply(self, inst: Instance) -> Instance:
        if self.vertex not in inst.modulator:
            raise TraceError(f"R1: {self.vertex + 1} is not a modulator vertex")
        return inst.evolve(
            graph=inst.graph.delete({self.vertex}),
            modulator=inst.modulator - {self.vertex},
        )

    def to_line(self) -> str:
        return f"R1 {self.vertex + 1}"


@dataclass(frozen=True)
class Rule2:
    u: int
    v: int

    def apply(self, inst: Instance) -> Instance:
        if not {self.u, self.v} <= inst.modulator or inst.graph.has_edge(self.u, self.v):
            raise TraceError(f"R2: cannot add edge {self.u + 1}-{self.v + 1}")
        return inst.evolve(graph=inst.graph.add_edges([(self.u, self.v)]))

    def to_line(self) -> str:
        return f"R2 {self.u + 1} {self.v + 1}"


@dataclass(frozen=True)
class Rule3:
    triple: tuple[int, int, int]
    triangle: tuple[int, int, int]

    def apply(self, inst: Instance) -> Instance:
        if not set(self.triple) <= inst.modulator:
            raise TraceError("R3: triple not inside the modulator")
        p = self.triangle
        if len(set(p)) != 3 or set(p) & inst.graph.vertices:
            raise TraceError("R3: triangle ids are not fresh")
        g = inst.graph.add_vertices(p)
        g = g.add_edges([(p[0], p[1]), (p[0], p[2]), (p[1], p[2])])
        g = g.add_edges(zip(p, self.triple))
        return inst.evolve(graph=g, k=inst.k + 1)

    def to_line(self) -> str:
        return f"R3 {_fmt(self.triple)} -> {_fmt(self.triangle)}"


@dataclass(frozen=True)
class Rule4:
    component: tuple[int, ...]
    alpha: int

    def apply(self, inst: Instance) -> Instance:
        comp = frozenset(self.component)
        if comp not in inst.forest.connected_components():
            raise TraceError("R4: not a component of the pseudoforest")
        k = inst.k - self.alpha
        return inst.evolve(graph=inst.graph.delete(comp), k=k, trivially_yes=inst.trivially_yes or k < 0)

    def to_line(self) -> str:
        return f"R4 {self.alpha} : {_fmt(self.component)}"


@dataclass(frozen=True)
class Rule5:
    breakers: tuple[int, ...]

    def apply(self, inst: Instance) -> Instance:
        if not set(self.breakers) <= inst.graph.vertices - inst.modulator:
            raise TraceError("R5: breakers must be pseudoforest vertices")
        return inst.evolve(modulator=inst.modulator | set(self.breakers))

    def to_line(self) -> str:
        return f"R5 : {_fmt(self.breakers)}".rstrip()


@dataclass(frozen=True)
class Rule6:
    plugin: str
    data: str = "pass-through"

    def apply(self, inst: Instance) -> Instance:
        from .plugins import get_plugin

        if self.data == "pass-through":
            return inst
        out, _ = get_plugin(self.plugin).replay(inst, self.data)
        return out

    def to_line(self) -> str:
        return f"R6 {self.plugin} : {self.data}"


Record = Rule1 | Rule2 | Rule3 | Rule4 | Rule5 | Rule6


@dataclass
class ReductionTrace:
    problem: str = IS
    records: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def to_text(self) -> str:
        lines = [HEADER, f"problem {self.problem}"] + [r.to_line() for r in self.records]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> ReductionTrace:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != HEADER:
            raise TraceError("missing trace header")
        if len(lines) < 2 or not lines[1].startswith("problem "):
            raise TraceError("missing problem line")
        trace = cls(problem=lines[1].split()[1])
        if trace.problem not in (IS, VC):
            raise TraceError(f"unknown problem {trace.problem}")
        for lineno, line in enumerate(lines[2:], 3):
            try:
                trace.records.append(_parse_record(line))
            except (ValueError, IndexError) as exc:
                raise TraceError(f"line {lineno}: {exc}") from None
        return trace

    def replay(self, original: Instance) -> list[Instance]:
        """Instances before each record, plus the final one (all in IS form)."""
        inst = original
        if inst.problem != self.problem:
            raise TraceError("trace and instance disagree on the problem")
        if inst.problem == VC:
            inst = convert_vc_is(inst)
        states = [inst]
        for rec in self.records:
            try:
                inst = rec.apply(inst)
            except InvalidInstance as exc:
                raise TraceError(f"{rec.to_line()}: {exc}") from None
            states.append(inst)
        return states


def _parse_record(line: str):
    tag, *rest = line.split()
    if tag == "R1":
        (v,) = _parse_ids(rest)
        return Rule1(v)
    if tag == "R2":
        u, v = _parse_ids(rest)
        return Rule2(u, v)
    if tag == "R3":
        arrow = rest.index("->")
        triple, tri = _parse_ids(rest[:arrow]), _parse_ids(rest[arrow + 1:])
        if len(triple) != 3 or len(tri) != 3:
            raise ValueError("R3 needs three modulator and three new vertices")
        return Rule3(tuple(triple), tuple(tri))
    if tag == "R4":
        colon = rest.index(":")
        return Rule4(tuple(_parse_ids(rest[colon + 1:])), int(rest[0]))
    if tag == "R5":
        return Rule5(tuple(_parse_ids(rest[1:])))
    if tag == "R6":
        name, _, data = line[3:].partition(":")
        return Rule6(name.strip(), data.strip())
    raise ValueError(f"unknown record {tag!r}")
