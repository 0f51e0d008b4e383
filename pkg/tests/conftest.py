import pytest

from leavitt import QQ, ZZ, Zmod, fixture
from leavitt.fixtures import NAMES

Z6 = Zmod(6)

# filled by test_acceptance, printed once the run finishes
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=NAMES)
def any_fixture(request):
    return request.param, fixture(request.param)


@pytest.fixture(params=[ZZ, Z6], ids=["Z", "Z6"])
def ring(request):
    return request.param


@pytest.fixture
def rings():
    return {"Z": ZZ, "Z6": Z6, "Q": QQ}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
