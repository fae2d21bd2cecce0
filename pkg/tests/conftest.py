import pytest

from topocheck.core import PointSet
from topocheck.fixtures import D2, E, I2, SIERPINSKI


@pytest.fixture
def E_space():
    return E


@pytest.fixture
def S():
    return SIERPINSKI


def ps(sp, labels):
    """PointSet from a string of single-character labels or a label list."""
    return sp.pointset(list(labels))


def full(sp):
    return PointSet.full(sp.n)


def empty(sp):
    return PointSet.empty(sp.n)


__all__ = ["D2", "E", "I2", "SIERPINSKI", "ps", "full", "empty"]


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
