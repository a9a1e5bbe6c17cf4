import pytest

from sdcat.oracle import corpus
from sdcat.subdivision import build_sd


@pytest.fixture(scope="session")
def groups():
    return corpus()


@pytest.fixture(scope="session")
def sds(groups):
    return {name: build_sd(G, 2) for name, G in groups.items()}


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    lines = test_acceptance.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
