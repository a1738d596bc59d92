import sys

import pytest
from hypothesis import settings

from qexact.combinatorics import parse_orientation

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rr():
    return parse_orientation("RR")


@pytest.fixture
def a7():
    return parse_orientation("RLRRLR")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
