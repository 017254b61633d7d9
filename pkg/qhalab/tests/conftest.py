import numpy as np
import pytest

from qhalab.core.config import settings
from qhalab.models import GroupParams, SampledLine
from qhalab.utils.rng import (
    generator,
    random_function,
    random_operator,
    random_signal,
)

TOL = 1e-10


@pytest.fixture
def rng() -> np.random.Generator:
    return generator(settings.DEFAULT_SEED)


@pytest.fixture(params=[3, 5, 7], ids=lambda n: f"N={n}")
def params(request) -> GroupParams:
    return GroupParams(N=request.param)


@pytest.fixture
def psi(params, rng):
    return random_signal(params, rng)


@pytest.fixture
def phi(params, rng):
    return random_signal(params, rng)


@pytest.fixture
def f(params, rng):
    return random_function(params, rng)


@pytest.fixture
def S(params, rng):
    return random_operator(params, rng)


@pytest.fixture
def T(params, rng):
    return random_operator(params, rng)


@pytest.fixture
def line() -> SampledLine:
    """Small self-dual grid (n = 4 L^2)."""
    return SampledLine(n=64, L=4.0)
