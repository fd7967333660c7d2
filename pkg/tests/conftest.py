from pathlib import Path

import numpy as np
import pytest

from spreadmem.formats import read_memories

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

EX1_MEMORIES = [(1, 1, 1, 1, 1), (1, -1, -1, -1, 1), (1, 1, -1, -1, -1)]
EX2_MEMORIES = [(1, 1, 1, 1), (1, -1, -1, 1), (-1, 1, 1, -1)]

# Matrices as printed for the two worked examples.
EX1_T = np.array([
    [0, 1, -1, -1, 1],
    [1, 0, 1, 1, -1],
    [-1, 1, 0, 3, 1],
    [-1, 1, 3, 0, 1],
    [1, -1, 1, 1, 0],
])
EX1_B = np.array([
    [0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0],
    [-1, 1, 3, 0, 0],
    [1, -1, 1, 1, 0],
])
EX2_T = np.array([
    [0, -1, -1, 3],
    [-1, 0, 3, -1],
    [-1, 3, 0, -1],
    [3, -1, -1, 0],
])
EX2_B = np.array([
    [0, 0, 0, 0],
    [-1, 0, 0, 0],
    [-1, 3, 0, 0],
    [3, -1, -1, 0],
])


@pytest.fixture
def ex1():
    return read_memories(FIXTURES / "example1.mem")


@pytest.fixture
def ex2():
    return read_memories(FIXTURES / "example2.mem")


_acceptance_lines = []


def record_acceptance(line):
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
