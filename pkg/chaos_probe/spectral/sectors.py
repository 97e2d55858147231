"""Parity and magnetization sectors, and restriction of operators to them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from numpy.typing import NDArray
from scipy import sparse

from chaos_probe.exceptions import SectorError, SymmetryViolationError
from chaos_probe.logging import logger
from chaos_probe.operators.register import Operator, SpinRegister

LEAKAGE_TOL = 1e-8
# sector columns pushed through H at once in restrict
COLUMN_CHUNK = 512

Parity = Literal["even", "odd"]


@dataclass(frozen=True)
class SymmetrySector:
    """Orthonormal injection of a symmetry sector into the full register space."""

    kind: str
    basis: sparse.csc_array = field(repr=False)
    n: int | None = None
    parity: int | None = None

    @property
    def dim(self) -> int:
        return int(self.basis.shape[1])


def parity_permutation(reg: SpinRegister) -> NDArray[np.int64]:
    """Index of the site-reversed image of every basis state."""
    weights = 1 << np.arange(reg.L, dtype=np.int64)
    # reversing the bit table turns site k into site L + 1 - k
    return reg.occupations() @ weights


def parity_operator(reg: SpinRegister) -> Operator:
    """Site-reversal operator P_{1,L} P_{2,L-1} ... as a permutation matrix."""
    entries = np.zeros((reg.dim, reg.dim))
    entries[parity_permutation(reg), reg.basis()] = 1.0
    return Operator(entries, hermitian=True)


def _injection(
    dim: int,
    rows: NDArray[np.int64],
    columns: NDArray[np.int64],
    values: NDArray[np.float64],
    width: int,
) -> sparse.csc_array:
    return sparse.csc_array((values, (rows, columns)), shape=(dim, width))


def _parity_block(
    states: NDArray[np.int64],
    reg: SpinRegister,
    parity: Parity,
) -> sparse.csc_array:
    image = parity_permutation(reg)[states]
    first = states[states < image]
    second = image[states < image]
    pairs = np.arange(first.size)
    half = math.sqrt(0.5)

    if parity == "odd":
        return _injection(
            reg.dim,
            np.concatenate([first, second]),
            np.concatenate([pairs, pairs]),
            np.concatenate([np.full(first.size, half), np.full(first.size, -half)]),
            first.size,
        )
    if parity != "even":
        raise SectorError(f"unknown parity {parity!r}")
    fixed = states[image == states]
    columns = fixed.size + pairs
    return _injection(
        reg.dim,
        np.concatenate([fixed, first, second]),
        np.concatenate([np.arange(fixed.size), columns, columns]),
        np.concatenate([np.ones(fixed.size), np.full(2 * first.size, half)]),
        fixed.size + first.size,
    )


def parity_sector(reg: SpinRegister, parity: Parity) -> SymmetrySector:
    """
    One eigenspace of the site-reversal operator.

    :param reg: spin register.
    :param parity: ``even`` or ``odd``.
    :returns: sector with a sparse injection.
    """
    basis = _parity_block(reg.basis(), reg, parity)
    logger.debug(f"Parity sector L={reg.L}: {parity}={basis.shape[1]}")
    return SymmetrySector(f"parity-{parity}", basis, parity=1 if parity == "even" else -1)


def parity_sectors(reg: SpinRegister) -> tuple[SymmetrySector, SymmetrySector]:
    """Even and odd eigenspaces of the site-reversal operator, dims summing to 2^L."""
    return parity_sector(reg, "even"), parity_sector(reg, "odd")


def _magnetization_states(reg: SpinRegister, n: int) -> NDArray[np.int64]:
    if not 0 <= n <= reg.L:
        raise SectorError(f"magnetization sector n={n} outside 0..{reg.L}")
    # a 0 bit is a spin up
    ups = reg.L - reg.occupations().sum(axis=1)
    return reg.basis()[ups == n]


def magnetization_sector(reg: SpinRegister, n: int) -> SymmetrySector:
    """
    Computational states with exactly n spins up.

    :param reg: spin register.
    :param n: number of up spins, 0..L.
    :returns: sector of dimension C(L, n).
    """
    states = _magnetization_states(reg, n)
    columns = np.arange(states.size)
    basis = _injection(reg.dim, states, columns, np.ones(states.size), states.size)
    return SymmetrySector(f"magnetization({n})", basis, n=n)


def magnetization_parity_sector(reg: SpinRegister, n: int, parity: Parity) -> SymmetrySector:
    """Even or odd parity block inside the magnetization-n sector."""
    basis = _parity_block(_magnetization_states(reg, n), reg, parity)
    return SymmetrySector(
        f"magnetization({n})/parity-{parity}",
        basis,
        n=n,
        parity=1 if parity == "even" else -1,
    )


def magnetization_parity_sectors(
    reg: SpinRegister,
    n: int,
) -> tuple[SymmetrySector, SymmetrySector]:
    return magnetization_parity_sector(reg, n, "even"), magnetization_parity_sector(reg, n, "odd")


def restrict(
    H: Operator,
    sector: SymmetrySector,
    tol: float = LEAKAGE_TOL,
    parameter: float | None = None,
) -> Operator:
    """
    Block of H inside a symmetry sector.

    The absolute leakage max|(I - P P^T) H P| is accumulated over column chunks
    of the injection P, so only H and the block are held densely.

    :param H: Hermitian operator on the full space.
    :param sector: target sector with injection P.
    :param tol: leakage tolerance.
    :param parameter: sweep value reported in the error, if any.
    :returns: Hermitian block P^T H P.
    :raises SymmetryViolationError: if H leaks out of the sector.
    """
    injection = sector.basis
    block = np.empty((sector.dim, sector.dim), dtype=H.entries.dtype)
    leakage = 0.0
    for start in range(0, sector.dim, COLUMN_CHUNK):
        stop = min(start + COLUMN_CHUNK, sector.dim)
        # P^T H = (H P)^dagger for Hermitian H and real P
        image = (injection[:, start:stop].T @ H.entries).conj().T
        chunk = injection.T @ image
        block[:, start:stop] = chunk
        leakage = max(leakage, float(np.max(np.abs(image - injection @ chunk))))
    if leakage > tol:
        raise SymmetryViolationError(leakage, tol, parameter)
    if leakage > LEAKAGE_TOL:
        logger.warning(
            f"{sector.kind}: leakage {leakage:.2e} accepted under loosened tolerance",
        )
    block = 0.5 * (block + block.conj().T)
    return Operator(block, hermitian=True)
