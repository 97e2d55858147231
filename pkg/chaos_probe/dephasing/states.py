"""Random environment states and the per-realization seed streams."""

from __future__ import annotations

from functools import reduce

import numpy as np
from numpy.typing import NDArray

from chaos_probe.operators.register import SpinRegister

DYNAMICS_STREAM = 0
DISORDER_STREAM = 1
PROBE_STREAM = 2


def derive_rng(seed: int, stream: int, point: int = 0, realization: int = 0) -> np.random.Generator:
    """
    Generator for one task of a seeded run.

    The stream depends only on (seed, stream, point, realization), so tasks can
    run in any order or process and still draw identical numbers.
    """
    sequence = np.random.SeedSequence(seed, spawn_key=(stream, point, realization))
    return np.random.default_rng(sequence)


def random_product_state(reg: SpinRegister, rng: np.random.Generator) -> NDArray[np.complex128]:
    """
    Product of L random single-spin pure states.

    Each spin is cos(v/2)|0> + exp(i p) sin(v/2)|1> with v uniform on [0, pi)
    and p uniform on [0, 2 pi).

    :param reg: spin register.
    :param rng: seeded generator.
    :returns: unit vector of length 2^L, site 1 most significant.
    """
    polar = rng.uniform(0.0, np.pi, size=reg.L)
    azimuth = rng.uniform(0.0, 2 * np.pi, size=reg.L)
    spins = [
        np.array([np.cos(v / 2), np.exp(1j * p) * np.sin(v / 2)])
        for v, p in zip(polar, azimuth)
    ]
    return reduce(np.kron, spins)


def haar_random_state(reg: SpinRegister, rng: np.random.Generator) -> NDArray[np.complex128]:
    return haar_random_states(reg, rng, 1)[:, 0]


def haar_random_states(
    reg: SpinRegister,
    rng: np.random.Generator,
    count: int,
) -> NDArray[np.complex128]:
    """Columns drawn uniformly from the unit sphere of the register space."""
    gaussian = rng.normal(size=(reg.dim, count)) + 1j * rng.normal(size=(reg.dim, count))
    return gaussian / np.linalg.norm(gaussian, axis=0)
