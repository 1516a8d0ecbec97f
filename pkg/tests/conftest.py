from __future__ import annotations

import pytest

_LINES_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    """Collects one PASS/FAIL line per acceptance criterion."""
    lines = request.config.stash.setdefault(_LINES_KEY, [])

    def log(line: str):
        lines.append(line)
        print(line)

    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
