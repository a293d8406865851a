import numpy as np
import pytest

from opnorm import EstimatorConfig


@pytest.fixture
def loshu() -> np.ndarray:
    """The classic 3x3 magic square; row and column sums are 15."""
    return np.array([[8, 1, 6], [3, 5, 7], [4, 9, 2]], dtype=float)


@pytest.fixture
def fast_config() -> EstimatorConfig:
    """Small sampling budget for tests that only need 1e-3 accuracy."""
    return EstimatorConfig(restarts=6, sample_count=2000)


def assert_rel(actual: float, expected: float, rtol: float) -> None:
    scale = max(abs(expected), 1e-300)
    assert abs(actual - expected) <= rtol * scale, (
        f"{actual!r} != {expected!r} within rel {rtol}")


# one line per acceptance criterion, shown after the test summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
