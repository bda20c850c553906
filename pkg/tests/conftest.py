import os
import sys

import pytest

HERE = os.path.dirname(__file__)
sys.path.insert(0, HERE)
FIXTURES = os.path.join(os.path.dirname(HERE), "fixtures")

ACCEPTANCE_LINES = []


def load_fixture(name):
    from prioaba import parse
    with open(os.path.join(FIXTURES, name + ".aba"), encoding="utf-8") as fh:
        return parse(fh.read())


@pytest.fixture
def fixture():
    return load_fixture


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
