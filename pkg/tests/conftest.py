import os
import sys

import numpy as np
import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from concbound import BipartiteDensity  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

BELL = np.array([1, 0, 0, 1]) / np.sqrt(2)


@pytest.fixture
def bell():
    return BipartiteDensity.from_pure(BELL, (2, 2))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
