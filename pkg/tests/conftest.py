from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from ctrlhubs import DirectedGraph, parse_edge_list

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

SMALL = {
    "chain": "1 2\n2 3\n",
    "chain4": "1 2\n2 3\n3 4\n",
    "star": "1 2\n1 3\n",
    "diamond": "1 2\n1 3\n2 4\n3 4\n",
    "cycle": "1 2\n2 3\n3 1\n",
    "selfloop": "1 1\n",
}


@pytest.fixture(params=sorted(SMALL))
def small_graph(request) -> DirectedGraph:
    return parse_edge_list(SMALL[request.param])


@pytest.fixture
def chain():
    return parse_edge_list(SMALL["chain"])


@pytest.fixture
def star():
    return parse_edge_list(SMALL["star"])


@pytest.fixture
def diamond():
    return parse_edge_list(SMALL["diamond"])


@pytest.fixture
def cycle():
    return parse_edge_list(SMALL["cycle"])


@st.composite
def digraphs(draw, min_nodes=1, max_nodes=8, self_loops=True):
    """Random digraphs on dense indices, isolated nodes allowed."""
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(n) if self_loops or u != v]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=3 * n) if pairs else st.just([]))
    return DirectedGraph.from_edges(n, edges)


def labels(g: DirectedGraph, nodes) -> set[str]:
    return {g.labels[i] for i in nodes}


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
