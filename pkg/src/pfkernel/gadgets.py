"""Clause gadgets and the CNF-SAT to IS/mock-forest-modulator construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .graph import Graph, GraphError


class CnfParseError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for c in self.clauses:
            if not c:
                raise ValueError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range for {self.num_vars} variables")

    def satisfied_by(self, assignment: Iterable[bool]) -> bool:
        a = tuple(assignment)
        return all(any(a[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)

    def brute_force_sat(self) -> bool:
        return any(self.satisfied_by(a) for a in product((False, True), repeat=self.num_vars))


def parse_dimacs_cnf(text: str) -> CnfFormula:
    n = m = None
    clauses: list[tuple[int, ...]] = []
    cur: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if n is not None or len(parts) != 4 or parts[1] != "cnf":
                raise CnfParseError("expected a single 'p cnf <n> <m>' line", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise CnfParseError("non-integer counts", lineno) from None
            continue
        if n is None:
            raise CnfParseError("clause before problem line", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise CnfParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                if not cur:
                    raise CnfParseError("empty clause", lineno)
                clauses.append(tuple(cur))
                cur = []
            elif abs(lit) > n:
                raise CnfParseError(f"variable {abs(lit)} out of range [1, {n}]", lineno)
            else:
                cur.append(lit)
    if n is None:
        raise CnfParseError("missing problem line")
    if cur:
        raise CnfParseError("last clause is missing its terminating 0")
    if len(clauses) != m:
        raise CnfParseError(f"header announces {m} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))


def dump_dimacs_cnf(F: CnfFormula) -> str:
    lines = [f"p cnf {F.num_vars} {len(F.clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in F.clauses]
    return "\n".join(lines) + "\n"


def _gadget_layout(k: int, start: int):
    """Ids and roles in the order r_0, l_1, r_1, s_1, ..., l_k, r_k, s_k, l_{k+1}."""
    roles = ["r0"]
    for i in range(1, k + 1):
        roles += [f"l{i}", f"r{i}", f"s{i}"]
    roles.append(f"l{k + 1}")
    ids = {role: start + j for j, role in enumerate(roles)}
    edges = []
    for i in range(1, k + 1):
        l, r, s = ids[f"l{i}"], ids[f"r{i}"], ids[f"s{i}"]
        edges += [(l, r), (l, s), (r, s)]
    for i in range(0, k + 1):
        edges.append((ids[f"r{i}"], ids[f"l{i + 1}"]))
    return ids, edges


def clause_gadget(k: int, start: int = 0) -> tuple[Graph, dict[int, str]]:
    """The clause gadget with ``k`` triangles: 3k + 2 vertices, 4k + 1 edges."""
    if k < 1:
        raise GraphError("clause gadget needs k >= 1")
    ids, edges = _gadget_layout(k, start)
    return Graph(ids.values(), edges), {v: role for role, v in ids.items()}


def spikes(labels: dict[int, str]) -> list[int]:
    return sorted(v for v, role in labels.items() if role.split(":")[-1].startswith("s"))


@dataclass
class GadgetInstance:
    graph: Graph
    modulator: frozenset[int]
    k: int
    labels: dict[int, str] = field(default_factory=dict)


def cnf_to_ismfm(F: CnfFormula) -> GadgetInstance:
    """IS instance that has an independent set of size k iff ``F`` is satisfiable.

    Variables come first (t_1, f_1, ..., t_n, f_n); each clause then gets its
    own gadget whose r-th spike is wired to f_i for literal x_i and to t_i
    for literal -x_i.
    """
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    vertices = list(range(2 * F.num_vars))
    for i in range(1, F.num_vars + 1):
        t, f = 2 * (i - 1), 2 * (i - 1) + 1
        labels[t], labels[f] = f"t{i}", f"f{i}"
        edges.append((t, f))
    nxt = 2 * F.num_vars
    for j, clause in enumerate(F.clauses, 1):
        ids, gedges = _gadget_layout(len(clause), nxt)
        vertices += ids.values()
        edges += gedges
        for role, v in ids.items():
            labels[v] = f"c{j}:{role}"
        for r, lit in enumerate(clause, 1):
            i = abs(lit)
            target = 2 * (i - 1) + 1 if lit > 0 else 2 * (i - 1)
            edges.append((ids[f"s{r}"], target))
        nxt += len(ids)
    k = F.num_vars + sum(len(c) + 2 for c in F.clauses)
    return GadgetInstance(Graph(vertices, edges), frozenset(range(2 * F.num_vars)), k, labels)


def dump_gadget_sidecar(inst: GadgetInstance) -> str:
    lines = [
        "modulator: " + " ".join(str(v + 1) for v in sorted(inst.modulator)),
        f"k: {inst.k}",
        "problem: IS",
    ]
    lines += [f"label: {v + 1} {inst.labels[v]}" for v in sorted(inst.labels)]
    return "\n".join(lines) + "\n"
