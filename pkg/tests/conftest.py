import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings

from commgraph import GF, QQ, Mat

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("ci", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("ci")

# filled by test_acceptance, printed at the end of the session
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])


def random_matrix(rng: random.Random, field, n: int, lo: int = -3, hi: int = 3) -> Mat:
    if field == QQ:
        return Mat(field, [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
    return Mat(field, [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def F2():
    return GF(2)


@pytest.fixture
def F3():
    return GF(3)


@pytest.fixture
def F5():
    return GF(5)


@pytest.fixture
def F7():
    return GF(7)
