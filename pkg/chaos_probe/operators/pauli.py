"""Pauli strings on a spin register, built by bit arithmetic on basis indices."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Literal

import numpy as np
from numpy.typing import NDArray

from chaos_probe.operators.register import Operator, SpinRegister

Axis = Literal["x", "y", "z"]

SIGMA: dict[str, NDArray[np.complex128]] = {
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def pauli_action(
    factors: Mapping[int, Axis],
    reg: SpinRegister,
) -> tuple[NDArray[np.int64], NDArray[np.complex128]]:
    """
    Action of a Pauli string on every computational basis state.

    Column s of the string has a single nonzero entry, ``phase[s]`` in row
    ``target[s]``.

    :param factors: mapping site -> axis, sites 1-based.
    :param reg: spin register.
    :returns: (target, phase) arrays of length dim.
    """
    basis = reg.basis()
    flip = 0
    phase = np.ones(reg.dim, dtype=np.complex128)
    for site, axis in factors.items():
        pos = reg.check_site(site)
        sign = 1 - 2 * ((basis >> pos) & 1)
        if axis == "x":
            flip |= 1 << pos
        elif axis == "y":
            # sigma^y|0> = i|1>, sigma^y|1> = -i|0>
            flip |= 1 << pos
            phase *= 1j * sign
        elif axis == "z":
            phase *= sign
        else:
            raise ValueError(f"unknown Pauli axis {axis!r}")
    return basis ^ flip, phase


def embed_pauli(axis: Axis, site: int, reg: SpinRegister) -> Operator:
    """
    Single-site Pauli matrix embedded in the register space.

    Returns I^(site-1) (x) sigma^axis (x) I^(L-site).

    :param axis: one of x, y, z.
    :param site: 1-based site label.
    :param reg: spin register.
    :returns: Hermitian operator squaring to the identity.
    """
    target, phase = pauli_action({site: axis}, reg)
    entries = np.zeros((reg.dim, reg.dim), dtype=np.complex128)
    entries[target, reg.basis()] = phase
    return Operator(entries, hermitian=True)


class HamiltonianBuilder:
    """
    Accumulates weighted Pauli strings into one dense matrix.

    Only one dim x dim buffer is held, so chains at the memory guard can be
    assembled. A real builder accepts strings with an even number of
    sigma^y factors only.
    """

    def __init__(self, reg: SpinRegister, real: bool = True) -> None:
        self.reg = reg
        self.real = real
        dtype = np.float64 if real else np.complex128
        self._entries = np.zeros((reg.dim, reg.dim), dtype=dtype)

    def add(self, coeff: float, factors: Mapping[int, Axis]) -> "HamiltonianBuilder":
        if coeff == 0:
            return self
        target, phase = pauli_action(factors, self.reg)
        if self.real:
            if sum(axis == "y" for axis in factors.values()) % 2:
                raise ValueError("odd sigma^y strings are imaginary, use real=False")
            self._entries[target, self.reg.basis()] += coeff * phase.real
        else:
            self._entries[target, self.reg.basis()] += coeff * phase
        return self

    def add_exchange(
        self,
        coeff: float,
        first: int,
        second: int,
        zz: float = 1.0,
    ) -> "HamiltonianBuilder":
        """Adds coeff * (xx + yy + zz * zz) on a pair of sites."""
        self.add(coeff, {first: "x", second: "x"})
        self.add(coeff, {first: "y", second: "y"})
        self.add(coeff * zz, {first: "z", second: "z"})
        return self

    def build(self) -> Operator:
        return Operator(self._entries, hermitian=True)
