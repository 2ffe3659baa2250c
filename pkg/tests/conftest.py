import pytest

from poincare_orbits import GALILEAN, KinematicParams

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=[1.0, 3e8, "inf"], ids=["c=1", "c=3e8", "c=inf"])
def params(request):
    return KinematicParams.parse(request.param)


@pytest.fixture
def unit_c():
    return KinematicParams(1.0)


@pytest.fixture
def galilean():
    return GALILEAN


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
