import json
from pathlib import Path

import numpy as np
import pytest

FROZEN = Path(__file__).parent / "oracles" / "frozen.json"


def as_array(data):
    arr = np.array(data, dtype=float)
    return arr[..., 0] + 1j * arr[..., 1]


@pytest.fixture(scope="session")
def oracle():
    """Frozen mpmath reference values; matrices decoded to complex arrays."""
    raw = json.loads(FROZEN.read_text())

    def get(key):
        value = raw[key]
        if isinstance(value, dict):
            return {k: as_array(v) for k, v in value.items()}
        if isinstance(value, list) and value and isinstance(value[0], list):
            return as_array(value)
        return value

    return get


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def crandn(rng, n, m=None):
    m = n if m is None else m
    return (rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))) / np.sqrt(2)



def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(LINES):
            terminalreporter.write_line(line)
