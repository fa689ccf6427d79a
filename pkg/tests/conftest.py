import numpy as np
import pytest

from leapertours import SearchConfig, find_tours

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def searched_tours():
    """A few closed tours found by the engine, keyed by (k, d)."""
    out = {}
    for k, d in [(3, 1), (6, 5), (7, 5), (8, 7), (10, 9), (11, 9)]:
        result = find_tours(SearchConfig(k, d))
        assert result.tours, (k, d)
        out[k, d] = result.tours[0]
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240615)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
