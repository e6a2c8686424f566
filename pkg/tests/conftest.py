import numpy as np
import pytest

from meyerbank import compose_banks, synthesize_bank

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def banks():
    """Default-parameter banks shared by the whole session (S=8192, eps=1e-10)."""
    out = {n: synthesize_bank(n) for n in (2, 3, 4, 5)}
    out["2d"] = synthesize_bank(2, classical2=False)
    out["6"] = compose_banks(out[3], out[2])
    out["4c"] = compose_banks(out[2], out[2])
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_signal(rng, length):
    return rng.normal(size=length) + 1j * rng.normal(size=length)


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
