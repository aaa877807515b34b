from __future__ import annotations

import pytest

from spslab import build_closure_space, to_sps

FIXTURES = {
    "E1": ([0, 1], [[], [0, 1]]),
    "E2": ([0, 1], [[], [0], [1], [0, 1]]),
    "E3": ([0, 1], [[], [1], [0, 1]]),
    "E4": ([1, 2, 3], [[], [1], [2], [1, 2, 3]]),
    "E5": ([1, 2, 3, 4], [[], [1, 2], [3, 4], [1, 2, 3, 4]]),
}


def space(name):
    points, family = FIXTURES[name]
    return build_closure_space(points, family)


def name(*points) -> str:
    """Lattice element name that ``to_sps`` gives the closed set ``points``."""
    return "{" + ",".join(str(p) for p in points) + "}"


@pytest.fixture
def E1():
    return space("E1")


@pytest.fixture
def E2():
    return space("E2")


@pytest.fixture
def E3():
    return space("E3")


@pytest.fixture
def E4():
    return space("E4")


@pytest.fixture
def E5():
    return space("E5")


@pytest.fixture
def G():
    return to_sps


_CRITERIA: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, text = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        status = "PASS" if report.passed else "FAIL"
        prev = _CRITERIA.get(number)
        if prev is None or prev[0] == "PASS":
            _CRITERIA[number] = (status, text)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, text = _CRITERIA[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {text}")
