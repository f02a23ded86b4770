from pathlib import Path

import pytest

from affclass.hyperbola import HyperbolaDatum
from affclass.monoid import MonoidRing

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

QUADRANT_RAYS = [(1, 0), (0, 1)]
A1_RAYS = [(0, 1), (2, -1)]
SQUARE_RAYS = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]


@pytest.fixture(scope="session")
def quadrant():
    return MonoidRing.from_generators(2, QUADRANT_RAYS)


@pytest.fixture(scope="session")
def a1():
    return MonoidRing.from_generators(2, A1_RAYS)


@pytest.fixture(scope="session")
def square():
    return MonoidRing.from_generators(3, SQUARE_RAYS)


@pytest.fixture(scope="session")
def hyp33():
    return HyperbolaDatum((3, 3))


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
