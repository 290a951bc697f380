import pathlib

import pytest

from stirling_mesas import generate_all

DATA_DIR = pathlib.Path(__file__).parent / "data"


def load_sequence(name):
    """Read a vendored integer sequence, skipping comment lines."""
    values = []
    for line in (DATA_DIR / name).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            values.append(int(line))
    return values


@pytest.fixture(scope="session")
def ams_counts():
    """|AMS_n| for n = 1..15."""
    return load_sequence("ams_counts.txt")


@pytest.fixture(scope="session")
def maximal_counts():
    """Maximal-set counts for k = 1..6."""
    return load_sequence("maximal_counts.txt")


@pytest.fixture(scope="session")
def small_q():
    """Fully materialized Q_n for n = 1..7, keyed by order."""
    return {n: list(generate_all(n)) for n in range(1, 8)}
