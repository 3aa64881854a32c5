# tests/conftest.py
import numpy as np
import pytest

from domains.containment import GridConfig


@pytest.fixture
def grid():
    """Coarser lattice for fast containment checks."""
    return GridConfig(1024)


@pytest.fixture
def rng():
    return np.random.default_rng(20240)


@pytest.fixture
def circle():
    return 0.9 * np.exp(2j * np.pi * np.arange(64) / 64)
