import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coilfield import CoilSystem, Coil, default_region, make_preset, simulate_grid


@pytest.fixture(scope="session")
def helmholtz():
    return make_preset("helmholtz", 0.5, 100, 1.0)


@pytest.fixture(scope="session")
def helmholtz_grid(helmholtz):
    return simulate_grid(helmholtz, default_region(helmholtz))


@pytest.fixture
def single_loop():
    return CoilSystem(coils=(Coil(1.0, 1, 1.0, 0.0),), label="loop")
