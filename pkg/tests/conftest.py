from pathlib import Path

import pytest

from penner_entropy import TwistWord, build_plumbing

SPEC_DIR = Path(__file__).resolve().parent.parent / "specs"


def a3(n=3):
    return build_plumbing(["1", "2", "3"], [("1", "2"), ("2", "3")], n)


# phi = t1 o t2^-1 o t3, stored first-applied first
PHI = TwistWord([("3", 1), ("2", -1), ("1", 1)])
# phi = t3 o t1 o t2^-1 o t3
PHI4 = TwistWord.from_composition_order([("3", 1), ("1", 1), ("2", -1), ("3", 1)])


@pytest.fixture
def spec3():
    return a3(3)


@pytest.fixture
def phi():
    return PHI


@pytest.fixture
def phi4():
    return PHI4


@pytest.fixture
def spec_dir():
    return SPEC_DIR


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
