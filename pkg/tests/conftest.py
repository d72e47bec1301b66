import os

import pytest

from acceptance_log import LOG


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=int(os.environ.get("TEST_SEED", "20240607")),
                     help="seed for randomized tests")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


def pytest_terminal_summary(terminalreporter):
    if not LOG:
        return
    terminalreporter.section("acceptance criteria")
    for line in LOG:
        terminalreporter.write_line(line)
