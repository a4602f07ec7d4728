"""Shared fixtures and the acceptance-criteria summary hook."""

from __future__ import annotations

import pytest

from paircoal import Graph

ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


def record_acceptance(number: int, title: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS.append((number, title, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        line = f"criterion {number:2d} [{status}] {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


@pytest.fixture(scope="session")
def path():
    return path_graph


@pytest.fixture(scope="session")
def cycle():
    return cycle_graph


@pytest.fixture(scope="session")
def star():
    return star_graph
