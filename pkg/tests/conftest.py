from functools import lru_cache

import pytest

from uwca import engine


@lru_cache(maxsize=None)
def _run(kind, n):
    return engine.run(kind, n)


@pytest.fixture(scope="session")
def run_cached():
    """Shared simulations; callers must not mutate the returned state."""
    return _run


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
