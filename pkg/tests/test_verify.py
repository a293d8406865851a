"""Self-verification suites."""
import numpy as np
import pytest

from opnorm import run_suite
from opnorm.verify import SUITES


def complex_matrix(seed: int = 44, n: int = 3) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


class TestSuites:
    def test_magic_all_pass(self, loshu, fast_config):
        checks = run_suite(loshu, "all", config=fast_config)
        assert checks and all(c.passed for c in checks), [
            (c.name, c.detail) for c in checks if not c.passed]
        names = [c.name for c in checks]
        assert len(names) == len(set(names))
        assert any(n.startswith("interpolation:constant-segment") for n in names)
        assert any(n.startswith("cross-check:three-evaluators") for n in names)

    def test_complex_all_pass(self, fast_config):
        checks = run_suite(complex_matrix(), "all", config=fast_config)
        assert checks and all(c.passed for c in checks), [
            (c.name, c.detail) for c in checks if not c.passed]
        names = [c.name for c in checks]
        # phase structure: no constant segments, no triple agreement
        assert "interpolation:edge-p1" in names
        assert not any(n.startswith("cross-check:three-evaluators") for n in names)
        bracket = next(c for c in checks if c.name.startswith("cross-check:interior-bracket"))
        assert "lower bound only" in bracket.detail

    def test_zero_matrix(self, fast_config):
        checks = run_suite(np.zeros((3, 3)), "all", config=fast_config)
        assert checks and all(c.passed for c in checks)

    def test_single_suites_are_subsets(self, loshu, fast_config):
        for suite in ("interpolation", "strictness", "cross-check"):
            checks = run_suite(loshu, suite, config=fast_config)
            prefix = suite.split("-")[0]
            assert checks
            assert all(c.name.startswith(prefix) for c in checks)

    def test_unknown_suite(self, loshu):
        with pytest.raises(ValueError):
            run_suite(loshu, "everything")
        assert "all" in SUITES

    def test_diagonal_hypothesis_is_labeled(self, loshu, fast_config):
        checks = run_suite(loshu, "strictness", config=fast_config)
        diag = next(c for c in checks if "diagonal-hypothesis" in c.name)
        assert diag.passed
        assert "equal at sampled p (exact)" in diag.detail
        checks = run_suite(complex_matrix(), "strictness", config=fast_config)
        diag = next(c for c in checks if "diagonal-hypothesis" in c.name)
        assert diag.passed  # a label, never a gate
        assert "not claimed" in diag.detail
