import random
import sys

import pytest

from transgen.semigroup import closure
from transgen.transform import Transformation


def T(*images):
    return Transformation(images)


@pytest.fixture(scope='session')
def full_t3():
    return closure([T(2, 1, 3), T(2, 3, 1), T(1, 1, 3)])


@pytest.fixture(scope='session')
def cyclic3():
    return closure([T(2, 3, 1)])


@pytest.fixture(scope='session')
def left_zero3():
    return closure([T(1, 1, 1), T(2, 2, 2), T(3, 3, 3)])


def random_transformation(rng, n):
    return Transformation([rng.randint(1, n) for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20261018)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get('test_acceptance')
    lines = getattr(mod, 'RESULTS', None)
    if lines:
        terminalreporter.section('acceptance criteria')
        for line in lines:
            terminalreporter.write_line(line)
