import itertools

import pytest

from pfkernel.graph import Graph
from pfkernel.oracle import OracleBudget

# kernels of the test instances can outgrow the oracle's default 25 vertices
BIG = OracleBudget(max_vertices=120, max_nodes=5_000_000)


def brute_alpha(G: Graph) -> int:
    """Independence number by trying every subset, largest first."""
    vs = sorted(G.vertices)
    for size in range(len(vs), 0, -1):
        for S in itertools.combinations(vs, size):
            if G.is_independent(S):
                return size
    return 0


def bowtie() -> Graph:
    return Graph(range(5), [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


@pytest.fixture
def big_budget():
    return BIG


# one summary line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[int, str] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(ACCEPTANCE[criterion])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
