import itertools

import pytest
from hypothesis import strategies as st

from ahgraph.generators import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    star_graph,
)
from ahgraph.graph import build_graph

ACCEPTANCE_RESULTS = []


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def star4():
    return star_graph(4)


@pytest.fixture
def k7k3():
    return disjoint_union(complete_graph(7), complete_graph(3))


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] {number}. {name}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
