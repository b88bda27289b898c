import random

import pytest

from matpak import Matrix

PAPER_DET_4X4 = [[7, 2, 9, 2], [8, 1, 5, 2], [9, 4, 9, 3], [5, 6, 1, 7]]

PAPER_MINOR_5X6 = [
    [2, 7, 3, 2, 3, 8],
    [4, 9, 3, 4, 9, 4],
    [5, 1, 1, 8, 1, 1],
    [6, 5, 6, 5, 2, 7],
    [8, 5, 1, 3, 8, 7],
]


def M(grid):
    return Matrix.from_rows(grid)


def random_int_grid(rng: random.Random, rows: int, cols: int, lo: int, hi: int):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


@pytest.fixture
def rng():
    return random.Random(20261016)


_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion this test gates")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    label = report.user_properties and dict(report.user_properties).get("criterion")
    if label:
        prev = _criteria.get(report.nodeid)
        outcome = "PASS" if report.passed else "FAIL"
        if prev is None or prev[1] == "PASS":
            _criteria[report.nodeid] = (label, outcome)


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_criteria.values()):
        terminalreporter.write_line(f"{outcome}  {label}")
