"""
Shared fixtures: the published parameters, golden orbit files and a
session-wide reproduction of the published experiment.
"""

from pathlib import Path
from typing import List

import pytest

from src.models.orbit import MapParameters
from src.services.report_builder import reproduce_paper

FIXTURES = Path(__file__).parent / "fixtures"


def load_golden(name: str) -> List[float]:
    """Read an `n value` golden file into a list of floats indexed by n."""
    values = []
    for line in (FIXTURES / name).read_text().splitlines():
        n, text = line.split()
        assert int(n) == len(values)
        values.append(float(text))
    return values


@pytest.fixture
def published_params() -> MapParameters:
    return MapParameters(r="3.8", x0="0.4", iterates=100)


@pytest.fixture(scope="session")
def published_report():
    return reproduce_paper()


@pytest.fixture(scope="session")
def golden_g() -> List[float]:
    return load_golden("published_orbit_g.txt")


@pytest.fixture(scope="session")
def golden_h() -> List[float]:
    return load_golden("published_orbit_h.txt")
