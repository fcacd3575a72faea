import pytest

from locdom.enumeration import generate
from locdom.verifier import Census

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def census_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("census")


@pytest.fixture(scope="session")
def census(census_dir):
    """Shared census source; the cache directory keeps order 8 from being rebuilt."""
    return Census(cache_dir=census_dir)


@pytest.fixture(scope="session")
def small_graphs():
    """Every isomorphism class of order 1..6."""
    return [g for n in range(1, 7) for g in generate(n)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
