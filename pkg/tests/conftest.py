import pathlib

import pytest

# one line per acceptance criterion, echoed into the terminal summary
ACCEPTANCE_RESULTS: list[str] = []


@pytest.fixture(scope="session")
def golden_dir() -> pathlib.Path:
    return pathlib.Path(__file__).resolve().parents[1] / "goldens"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
