"""Environment Hamiltonians, the probe coupling and the full dephasing Hamiltonian."""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

import numpy as np

from chaos_probe.exceptions import ConfigValidationError, DimensionMismatchError
from chaos_probe.logging import logger
from chaos_probe.operators.models import (
    HeisenbergConfig,
    IsingConfig,
    LongRangeConfig,
    ProbeConfig,
    XXZConfig,
)
from chaos_probe.operators.pauli import SIGMA, HamiltonianBuilder
from chaos_probe.operators.register import Operator, SpinRegister


def _ising(model: IsingConfig, reg: SpinRegister) -> Operator:
    builder = HamiltonianBuilder(reg)
    for k in range(1, reg.L + 1):
        builder.add(model.hx, {k: "x"})
        builder.add(model.hz, {k: "z"})
    for k in range(1, reg.L):
        builder.add(-model.J, {k: "z", k + 1: "z"})
    return builder.build()


def _heisenberg(model: HeisenbergConfig, reg: SpinRegister) -> Operator:
    if model.fields_z is None or len(model.fields_z) != reg.L:
        raise ConfigValidationError(
            "fields_z",
            f"needs {reg.L} drawn fields, draw them with HeisenbergConfig.with_fields",
        )
    builder = HamiltonianBuilder(reg)
    # S = sigma / 2
    for k in range(1, reg.L):
        builder.add_exchange(0.25, k, k + 1)
    for k, field in enumerate(model.fields_z, start=1):
        builder.add(0.5 * field, {k: "z"})
    return builder.build()


def _xxz(model: XXZConfig, reg: SpinRegister) -> Operator:
    builder = HamiltonianBuilder(reg)
    for k in range(1, reg.L):
        builder.add_exchange(1.0, k, k + 1, zz=model.mu)
    for k in range(1, reg.L - 1):
        builder.add_exchange(model.lam, k, k + 2, zz=model.mu)
    return builder.build()


def _longrange(model: LongRangeConfig, reg: SpinRegister) -> Operator:
    builder = HamiltonianBuilder(reg)
    for j in range(1, reg.L + 1):
        for jp in range(j + 1, reg.L + 1):
            builder.add(model.coupling_between(j, jp), {j: "x", jp: "x"})
        builder.add(model.Bz0 + (j - 1) * model.ge, {j: "z"})
    return builder.build()


_BUILDERS: dict[type, Callable[[Any, SpinRegister], Operator]] = {
    IsingConfig: _ising,
    HeisenbergConfig: _heisenberg,
    XXZConfig: _xxz,
    LongRangeConfig: _longrange,
}


def build_environment(
    model: IsingConfig | HeisenbergConfig | XXZConfig | LongRangeConfig,
    reg: SpinRegister,
) -> Operator:
    """
    Hamiltonian of an open environment chain.

    :param model: one of the four model records.
    :param reg: spin register.
    :returns: Hermitian operator of dimension 2^L.
    """
    logger.debug(f"Building {model.kind} environment, L={reg.L}")
    return _BUILDERS[type(model)](model, reg)


def build_coupling(g: float, reg: SpinRegister) -> Operator:
    """Environment part of the probe interaction, g * sigma_1^z."""
    return HamiltonianBuilder(reg).add(g, {1: "z"}).build()


def build_total(probe: ProbeConfig, env: Operator, coupling: Operator) -> Operator:
    """
    Full probe plus environment Hamiltonian.

    The probe is the most significant tensor factor, so the result is block
    diagonal with blocks +-omega/2 +- coupling + env.
    """
    if env.dim != coupling.dim:
        raise DimensionMismatchError(
            f"environment dim {env.dim} differs from coupling dim {coupling.dim}",
        )
    identity = np.eye(env.dim)
    entries = (
        np.kron(SIGMA["z"], 0.5 * probe.omega * identity)
        + np.kron(SIGMA["z"], coupling.entries)
        + np.kron(np.eye(2), env.entries)
    )
    if not np.iscomplexobj(env.entries) and not np.iscomplexobj(coupling.entries):
        entries = entries.real
    return Operator(entries, hermitian=True)


def total_magnetization(reg: SpinRegister, spin: bool = True) -> Operator:
    """
    Sum of sigma_k^z over the register, halved when ``spin`` is set.

    :param reg: spin register.
    :param spin: return S^z = sigma^z / 2 sums instead of Pauli sums.
    :returns: diagonal operator.
    """
    diagonal = (reg.L - 2 * reg.occupations().sum(axis=1)).astype(np.float64)
    if spin:
        diagonal *= 0.5
    return Operator(np.diag(diagonal), hermitian=True)
