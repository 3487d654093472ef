import numpy as np
import pytest

from hmeasure import ScoreDataset

ACCEPTANCE_LINES = []


@pytest.fixture
def d1():
    return ScoreDataset.from_arrays([0.1, 0.3], [0.2, 0.4])


@pytest.fixture
def perfect():
    return ScoreDataset.from_arrays([0.1, 0.2, 0.3], [0.5, 0.7])


@pytest.fixture
def identical():
    return ScoreDataset.from_arrays([0.1, 0.4, 0.4, 0.9], [0.1, 0.4, 0.4, 0.9])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
