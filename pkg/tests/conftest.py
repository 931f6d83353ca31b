import numpy as np
import pytest


@pytest.fixture
def rng():
    """Fresh seeded generator per test so test order cannot matter."""
    return np.random.default_rng(12345)
