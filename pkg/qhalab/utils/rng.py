"""Seeded random inputs for the suites.

Every ensemble draws from ``numpy.random.Generator(PCG64(seed))``; the stream
for modulus N is keyed by ``SeedSequence([seed, N, ...])`` so that adding a
modulus to ``n_list`` does not perturb the others.
"""

import numpy as np

from ..models import GroupParams, OperatorMatrix, PhaseFunction, Signal


def generator(seed: int | np.random.SeedSequence) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def child_generator(seed: int, *keys: int) -> np.random.Generator:
    """Independent stream for ``keys`` (usually N and a check index) under the suite seed."""
    return generator(np.random.SeedSequence([seed, *keys]))


def complex_normal(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_signal(params: GroupParams, rng: np.random.Generator) -> Signal:
    return Signal(values=complex_normal(rng, (params.N,)), params=params)


def random_operator(params: GroupParams, rng: np.random.Generator) -> OperatorMatrix:
    return OperatorMatrix(entries=complex_normal(rng, (params.N, params.N)), params=params)


def random_function(params: GroupParams, rng: np.random.Generator) -> PhaseFunction:
    return PhaseFunction(values=complex_normal(rng, (params.N, params.N)), params=params)


def random_positive_operator(
    params: GroupParams, rng: np.random.Generator
) -> OperatorMatrix:
    a = complex_normal(rng, (params.N, params.N))
    return OperatorMatrix(entries=a @ a.conj().T, params=params)


def random_nonnegative_function(
    params: GroupParams, rng: np.random.Generator
) -> PhaseFunction:
    return PhaseFunction(values=rng.uniform(size=(params.N, params.N)), params=params)
