"""Simple undirected graphs with stable integer vertex ids, plus DIMACS edge I/O."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised on malformed graph input or a vertex that is not in the graph."""


class DimacsParseError(GraphError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class Graph:
    """A finite simple graph.

    Vertex ids are arbitrary non-negative integers and never get renumbered, so
    a vertex keeps its name through any sequence of deletions and additions.
    Instances are treated as immutable: every operation returns a new graph.
    """

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            if v < 0:
                raise GraphError(f"negative vertex id {v}")
            adj.setdefault(v, set())
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj = {v: frozenset(nbrs) for v, nbrs in adj.items()}

    @classmethod
    def _from_adj(cls, adj: dict[int, frozenset[int]]) -> Graph:
        g = cls.__new__(cls)
        g._adj = adj
        return g

    # --- read-only access -------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._adj))

    def __len__(self) -> int:
        return len(self._adj)

    def adj(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"vertex {v} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.adj(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)

    def num_edges(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def max_id(self) -> int:
        return max(self._adj, default=-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset((v, n) for v, n in self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self.num_edges()})"

    # --- set operations ---------------------------------------------------

    def _check_members(self, S: Iterable[int]) -> frozenset[int]:
        S = frozenset(S)
        missing = S - self._adj.keys()
        if missing:
            raise GraphError(f"vertices {sorted(missing)} not in graph")
        return S

    def neighborhood(self, S: Iterable[int]) -> frozenset[int]:
        """Open neighborhood N(S): every neighbor of S that is not itself in S."""
        S = self._check_members(S)
        out: set[int] = set()
        for v in S:
            out |= self._adj[v]
        return frozenset(out - S)

    def closed_neighborhood(self, S: Iterable[int]) -> frozenset[int]:
        S = self._check_members(S)
        return self.neighborhood(S) | S

    def delete(self, S: Iterable[int]) -> Graph:
        """G - S. Ids in ``S`` that are not in the graph are ignored."""
        S = frozenset(S)
        if not S & self._adj.keys():
            return self
        return Graph._from_adj(
            {v: nbrs - S for v, nbrs in self._adj.items() if v not in S}
        )

    def induced(self, S: Iterable[int]) -> Graph:
        """G[S] for ``S`` a subset of the vertices."""
        S = self._check_members(S)
        return Graph._from_adj({v: self._adj[v] & S for v in S})

    def add_vertices(self, vs: Iterable[int]) -> Graph:
        adj = dict(self._adj)
        for v in vs:
            if v in adj:
                raise GraphError(f"vertex {v} already present")
            adj[v] = frozenset()
        return Graph._from_adj(adj)

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = {v: set(n) for v, n in self._adj.items()}
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge {u}-{v} has an endpoint outside the graph")
            adj[u].add(v)
            adj[v].add(u)
        return Graph._from_adj({v: frozenset(n) for v, n in adj.items()})

    def is_independent(self, S: Iterable[int]) -> bool:
        S = self._check_members(S)
        return all(not (self._adj[v] & S) for v in S)

    # --- traversal --------------------------------------------------------

    def connected_components(self) -> list[frozenset[int]]:
        """Components ordered by their smallest vertex id."""
        seen: set[int] = set()
        comps = []
        for s in sorted(self._adj):
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in self._adj[v]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def relabel(self, mapping: dict[int, int]) -> Graph:
        return Graph(
            (mapping[v] for v in self._adj),
            ((mapping[u], mapping[v]) for u, v in self.edges()),
        )


def neighborhood(G: Graph, S: Iterable[int]) -> frozenset[int]:
    return G.neighborhood(S)


def closed_neighborhood(G: Graph, S: Iterable[int]) -> frozenset[int]:
    return G.closed_neighborhood(S)


def induced_delete(G: Graph, S: Iterable[int]) -> Graph:
    return G.delete(S)


def connected_components(G: Graph) -> list[frozenset[int]]:
    return G.connected_components()


# --- small constructors used throughout tests and demos --------------------

def path_graph(n: int, start: int = 0) -> Graph:
    vs = range(start, start + n)
    return Graph(vs, ((v, v + 1) for v in vs[:-1]))


def cycle_graph(n: int, start: int = 0) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    vs = list(range(start, start + n))
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def complete_graph(n: int, start: int = 0) -> Graph:
    vs = range(start, start + n)
    return Graph(vs, ((u, v) for u in vs for v in vs if u < v))


# --- DIMACS edge format -----------------------------------------------------

def load_dimacs_graph(text: str | Iterable[str]) -> Graph:
    """Parse a DIMACS ``p edge`` file.

    Ids in the file are 1-based and become 0-based internally. ``c id D S``
    comment lines, as written by :func:`dump_dimacs_graph` for graphs with
    sparse ids, restore the stable id ``S`` (1-based) of file vertex ``D``.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    n = None
    edges = []
    ids: dict[int, int] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "c":
            if len(parts) == 4 and parts[1] == "id":
                try:
                    ids[int(parts[2])] = int(parts[3]) - 1
                except ValueError:
                    raise DimacsParseError("malformed id comment", lineno) from None
            continue
        if tag == "p":
            if n is not None:
                raise DimacsParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n, _m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsParseError("non-integer counts in problem line", lineno) from None
            if n < 0 or _m < 0:
                raise DimacsParseError("negative counts in problem line", lineno)
            continue
        if tag == "e":
            if n is None:
                raise DimacsParseError("edge before problem line", lineno)
            if len(parts) != 3:
                raise DimacsParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsParseError("non-integer vertex id", lineno) from None
            for w in (u, v):
                if not 1 <= w <= n:
                    raise DimacsParseError(f"vertex {w} out of range [1, {n}]", lineno)
            if u == v:
                raise DimacsParseError(f"self-loop on vertex {u}", lineno)
            edges.append((u - 1, v - 1))
            continue
        raise DimacsParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise DimacsParseError("missing problem line")
    g = Graph(range(n), edges)
    if ids:
        if sorted(ids) != list(range(1, n + 1)):
            raise DimacsParseError("id comments must cover every vertex exactly once")
        g = g.relabel({d - 1: s for d, s in ids.items()})
    return g


def dump_dimacs_graph(G: Graph, comment: str | None = None) -> str:
    """Serialize to DIMACS. Sparse vertex ids are preserved through ``c id`` lines."""
    order = sorted(G.vertices)
    dense = order == list(range(len(order)))
    pos = {v: i + 1 for i, v in enumerate(order)}
    out = [f"c {comment}" if comment else "c pfkernel graph"]
    if not dense:
        out += [f"c id {pos[v]} {v + 1}" for v in order]
    edges = G.edges()
    out.append(f"p edge {len(order)} {len(edges)}")
    out += [f"e {pos[u]} {pos[v]}" for u, v in edges]
    return "\n".join(out) + "\n"
