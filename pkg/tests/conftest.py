from itertools import combinations

import pytest

from coplex.graph import Graph


def make(n, edges, weights=None):
    return Graph.from_edges(n, edges, weights)


def P3():
    return make(3, [(1, 2), (2, 3)])


def K(n):
    return make(n, combinations(range(1, n + 1), 2))


def C(n):
    return make(n, [(i, i % n + 1) for i in range(1, n + 1)])


def PAW():
    return make(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture
def p3():
    return P3()


@pytest.fixture
def paw():
    return PAW()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
