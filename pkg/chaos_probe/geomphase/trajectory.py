"""Eigen-decomposition of the reduced probe state along a decoherence trace."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from chaos_probe.dephasing.factors import DecoherenceTrace
from chaos_probe.dephasing.grid import TimeGrid
from chaos_probe.dephasing.probe import reduced_states
from chaos_probe.logging import logger
from chaos_probe.operators.models import ProbeConfig
from chaos_probe.spectral.eigen import fix_phases

# Bloch radius below which rho is treated as I/2
DEGENERACY_RADIUS = 1e-12


@dataclass(frozen=True)
class ProbeTrajectory:
    """Leading eigenvalue and eigenvector of rho_r(t_i) on every grid time."""

    grid: TimeGrid
    states: NDArray[np.complex128] = field(repr=False)
    lambda_plus: NDArray[np.float64] = field(repr=False)
    psi_plus: NDArray[np.complex128] = field(repr=False)
    degenerate: NDArray[np.bool_] = field(repr=False)

    @property
    def size(self) -> int:
        return int(self.lambda_plus.size)

    def overlaps(self) -> NDArray[np.complex128]:
        """<Psi_+(t_i)|Psi_+(t_{i+1})> for consecutive samples."""
        return np.einsum("ij,ij->i", self.psi_plus[:-1].conj(), self.psi_plus[1:])


def bloch_radius(states: NDArray[np.complex128]) -> NDArray[np.float64]:
    """|Bloch vector| of a stack of qubit density matrices."""
    z = (states[:, 0, 0] - states[:, 1, 1]).real
    return np.sqrt(z**2 + 4 * np.abs(states[:, 0, 1]) ** 2)


def probe_trajectory(probe: ProbeConfig, trace: DecoherenceTrace) -> ProbeTrajectory:
    """
    Follow the dominant eigenbranch of the reduced probe state.

    Samples where rho = I/2 have no preferred eigenvector; they are flagged and
    carry the vector of the previous sample.

    :param probe: probe parameters.
    :param trace: decoherence factor on a time grid.
    :returns: probe trajectory.
    """
    states = reduced_states(probe, trace.values, trace.times)
    _, vectors = np.linalg.eigh(states)
    # eigh sorts ascending, the last column is Psi_+
    psi = fix_phases(vectors[:, :, -1].T).T
    radius = bloch_radius(states)
    degenerate = radius < DEGENERACY_RADIUS
    if degenerate[0]:
        psi[0] = np.array([1.0, 0.0])
    for i in np.flatnonzero(degenerate[1:]) + 1:
        psi[i] = psi[i - 1]
    if degenerate.any():
        logger.warning(f"Bridged {int(degenerate.sum())} degenerate probe samples")

    return ProbeTrajectory(
        grid=trace.grid,
        states=states,
        lambda_plus=np.minimum(0.5 * (1 + radius), 1.0),
        psi_plus=np.ascontiguousarray(psi),
        degenerate=degenerate,
    )
