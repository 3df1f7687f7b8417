import numpy as np
import pytest

from spinrep import grassmann as gr
from spinrep import isomorphisms as iso


@pytest.fixture(scope="session")
def mink():
    return gr.minkowski()


@pytest.fixture(scope="session")
def basis(mink):
    return iso.dirac_matrices(mink)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_symmetric_metric(rng, min_det=1e-6):
    """Random nondegenerate symmetric metric with entries in [-2, 2]."""
    while True:
        m = rng.uniform(-2.0, 2.0, size=(4, 4))
        m = (m + m.T) / 2.0
        if abs(np.linalg.det(m)) >= min_det:
            return gr.Metric(m)


def random_element_coeffs(rng):
    return rng.normal(size=16) + 1j * rng.normal(size=16)
