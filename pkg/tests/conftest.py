import math
import random
from pathlib import Path

import pytest

from solowkit.series import AnnualObservation, validate_series

DATA = Path(__file__).resolve().parents[1] / "data"

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def criterion():
    """Record a named acceptance criterion's outcome for the end-of-run summary."""

    class _Recorder:
        def __call__(self, name: str, passed: bool, detail: str = "") -> None:
            _criteria.append((name, passed, detail))

    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _criteria:
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] {name}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)


def cobb_douglas_series(rng: random.Random, alpha: float, years: int = 20, start: int = 1991):
    """Levels Q = A * K**alpha * L**(1-alpha) from random input and TFP paths.

    Returns the series and the TFP level path it was built from.
    """
    a, k, l = rng.uniform(0.5, 2.0), rng.uniform(1e3, 1e5), rng.uniform(1e4, 1e7)
    obs, tfp = [], []
    for i in range(years):
        if i:
            a *= math.exp(rng.gauss(0.0, 0.04))
            k *= math.exp(rng.gauss(0.03, 0.05))
            l *= math.exp(rng.gauss(0.01, 0.03))
        q = a * k**alpha * l ** (1 - alpha)
        obs.append(AnnualObservation(start + i, q, k, l))
        tfp.append(a)
    return validate_series(obs), tfp
