import pytest
from hypothesis import settings

from bitop.catalog import CATALOG
from bitop.search import all_spaces

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, passed: bool, detail: str = "") -> None:
    ACCEPTANCE[criterion] = (passed, detail)


@pytest.fixture(scope="session")
def spaces3():
    return list(all_spaces(3))


@pytest.fixture(scope="session")
def spaces2():
    return list(all_spaces(2))


@pytest.fixture(params=list(CATALOG))
def catalog_space(request):
    return CATALOG[request.param].space


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if passed else 'FAIL'}  {detail}")
