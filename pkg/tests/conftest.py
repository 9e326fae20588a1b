import random

import pytest
from hypothesis import HealthCheck, settings

from subdet.lp import Polyhedron

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")

ACCEPTANCE_RESULTS = {}

UNIT_SQUARE = Polyhedron(((1, 0), (0, 1), (-1, 0), (0, -1)), (1, 1, 0, 0))
TRIANGLE = Polyhedron(((-2, 1), (1, -2), (1, 1)), (0, 0, 3))
DIAMOND_A = ((1, 1), (-1, 1), (-1, -1), (1, -1))


def cube(n):
    rows = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rows += [tuple(-int(i == j) for j in range(n)) for i in range(n)]
    return Polyhedron(rows, (1,) * n + (0,) * n)


@pytest.fixture
def rng():
    return random.Random(20241014)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, line = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {line}")
