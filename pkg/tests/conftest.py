import pytest

from orbistruct.cycles import parse_cycles, parse_generators
from orbistruct.groups import closure


def gen(text, degree=5):
    return closure(parse_generators(text, degree), degree)


@pytest.fixture(scope="session")
def a5():
    return gen("(1 2 3 4 5);(1 2 3)")


@pytest.fixture(scope="session")
def a4():
    return gen("(1 2 3);(1 2)(3 4)")


@pytest.fixture(scope="session")
def a3():
    return gen("(1 2 3)")


@pytest.fixture(scope="session")
def s3_in_a5():
    # N_{A5}(<(1 2 3)>): the twisted S3
    return gen("(1 2 3);(1 2)(4 5)")


@pytest.fixture(scope="session")
def s4():
    return gen("(1 2 3 4);(1 2)", 4)


@pytest.fixture(scope="session")
def d4():
    return gen("(1 2 3 4);(1 3)", 4)


@pytest.fixture
def p():
    return lambda text, degree=5: parse_cycles(text, degree)


@pytest.fixture(scope="session")
def group():
    """Build a group from a ';'-separated generator string (default degree 5)."""
    return gen


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line for an acceptance criterion."""

    def record(number, ok, detail):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
