import random

import pytest

from almost_gentle import corpus
from almost_gentle.generators import random_almost_gentle


@pytest.fixture(scope="session")
def algebras():
    return corpus.presentations()


@pytest.fixture
def ag1(algebras):
    return algebras["AG1"]


@pytest.fixture
def ag2(algebras):
    return algebras["AG2"]


def generated(n=500, seed=20240611):
    rng = random.Random(seed)
    return [random_almost_gentle(rng, name=f"R{i}") for i in range(n)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance")
        for line in RESULTS:
            terminalreporter.write_line(line)
