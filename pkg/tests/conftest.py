from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from resenv import fixtures  # noqa: E402

ACCEPTANCE_LINES: dict[int, str] = {}


def record_acceptance(number: int, passed: bool, detail: str) -> None:
    ACCEPTANCE_LINES[number] = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture(scope="session")
def heis():
    return fixtures.heisenberg()


@pytest.fixture(scope="session")
def pf1():
    return fixtures.perfect_field_algebra(1)


@pytest.fixture(scope="session")
def pf2():
    return fixtures.perfect_field_algebra(2)
