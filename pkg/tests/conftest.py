import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def pytest_addoption(parser):
    parser.addoption(
        "--acceptance-trials-scale", type=float, default=1.0,
        help="scale factor for acceptance-suite trial counts",
    )
