from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from primefree.graph import Graph, complement, cycle, path, star
from primefree.oracle import enumerate_all_graphs

K2 = Graph.complete(2)
K3 = Graph.complete(3)
K4 = Graph.complete(4)
P3 = path(3)
P4 = path(4)
C4 = cycle(4)
C5 = cycle(5)
CLAW = star(3)
# K4 minus the edge w3-w4, as in the "0|11" representation
DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


def labeled_graphs(k: int):
    """Every labeled graph on k vertices."""
    pairs = list(combinations(range(k), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(k, [p for i, p in enumerate(pairs) if bits >> i & 1])


def classes_up_to(k: int) -> list[Graph]:
    return [g for order in range(1, k + 1) for g in enumerate_all_graphs(order).members]


@st.composite
def graphs(draw, min_order: int = 0, max_order: int = 8) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


@pytest.fixture(scope="session")
def order4_patterns() -> list[Graph]:
    return list(enumerate_all_graphs(4).members)


__all__ = ["K2", "K3", "K4", "P3", "P4", "C4", "C5", "CLAW", "DIAMOND", "complement",
           "labeled_graphs", "classes_up_to", "graphs"]


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "REPORT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda x: int(x.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
