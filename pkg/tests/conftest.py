import numpy as np
import pytest
from hypothesis import settings

from qbent.functions import QFunc

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def random_qfunc(rng, q, n):
    return QFunc(q, n, rng.integers(0, q, size=q**n))


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
