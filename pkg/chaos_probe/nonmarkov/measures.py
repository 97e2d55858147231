"""Trace-distance diagnostics of information backflow from the environment."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from chaos_probe.dephasing.factors import DecoherenceTrace
from chaos_probe.dephasing.grid import TimeGrid
from chaos_probe.dephasing.probe import reduced_states
from chaos_probe.exceptions import DensityMatrixError, DimensionMismatchError
from chaos_probe.geomphase.trajectory import ProbeTrajectory
from chaos_probe.operators.models import ProbeConfig

DENSITY_TOL = 1e-9


@dataclass(frozen=True)
class DistinguishabilityTrace:
    grid: TimeGrid
    distance: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        if self.distance.shape != (self.grid.size,):
            raise DimensionMismatchError(
                f"{self.distance.size} distances for a grid of {self.grid.size} times",
            )

    @property
    def sigma(self) -> NDArray[np.float64]:
        """Forward difference (D[i+1] - D[i]) / dt."""
        return np.diff(self.distance) / self.grid.dt


def _check_density(rho: NDArray[np.complex128], name: str) -> None:
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DensityMatrixError(f"{name} is not a square matrix")
    if not np.allclose(rho, rho.conj().T, atol=DENSITY_TOL):
        raise DensityMatrixError(f"{name} is not Hermitian")
    if abs(np.trace(rho) - 1) > DENSITY_TOL:
        raise DensityMatrixError(f"{name} does not have unit trace")
    if np.linalg.eigvalsh(rho).min() < -DENSITY_TOL:
        raise DensityMatrixError(f"{name} is not positive semidefinite")


def trace_distance(rho1: ArrayLike, rho2: ArrayLike) -> float:
    """
    Half the trace norm of rho1 - rho2.

    :param rho1: density matrix.
    :param rho2: density matrix of the same size.
    :returns: distance in [0, 1].
    :raises DensityMatrixError: if an input is not a density matrix.
    """
    first = np.asarray(rho1, dtype=np.complex128)
    second = np.asarray(rho2, dtype=np.complex128)
    _check_density(first, "rho1")
    _check_density(second, "rho2")
    if first.shape != second.shape:
        raise DimensionMismatchError(f"shapes {first.shape} and {second.shape} differ")
    return float(0.5 * np.abs(np.linalg.eigvalsh(first - second)).sum())


def _distances(
    states1: NDArray[np.complex128],
    states2: NDArray[np.complex128],
) -> NDArray[np.float64]:
    halves = 0.5 * np.abs(np.linalg.eigvalsh(states1 - states2)).sum(axis=-1)
    return np.clip(halves, 0.0, 1.0)


def distinguishability(traj1: ProbeTrajectory, traj2: ProbeTrajectory) -> DistinguishabilityTrace:
    """
    Trace distance between two probe trajectories on the same grid.

    :param traj1: first trajectory.
    :param traj2: second trajectory.
    :returns: distinguishability trace.
    """
    if traj1.grid != traj2.grid:
        raise DimensionMismatchError("trajectories live on different time grids")
    return DistinguishabilityTrace(grid=traj1.grid, distance=_distances(traj1.states, traj2.states))


def dephasing_pair_trace(trace: DecoherenceTrace, omega: float) -> DistinguishabilityTrace:
    """
    Distinguishability of the probe pair starting in |+x> and |-x>.

    Under pure dephasing this pair gives D(t) = |r(t)|.

    :param trace: decoherence factor.
    :param omega: probe frequency.
    :returns: distinguishability trace.
    """
    plus = ProbeConfig(omega=omega, theta=math.pi / 2, phi=0.0)
    minus = ProbeConfig(omega=omega, theta=math.pi / 2, phi=math.pi)
    distance = _distances(
        reduced_states(plus, trace.values, trace.times),
        reduced_states(minus, trace.values, trace.times),
    )
    return DistinguishabilityTrace(grid=trace.grid, distance=distance)


def blp_measure(dt: DistinguishabilityTrace) -> float:
    """Total increase of D over the intervals where it grows."""
    increments = np.diff(dt.distance)
    return float(increments[increments > 0].sum())


def largest_revival_measure(dt: DistinguishabilityTrace) -> float:
    """Largest single revival, max over t <= t_f of D(t_f) - D(t)."""
    distance = dt.distance
    if distance.size < 2:
        return 0.0
    return float(np.max(distance - np.minimum.accumulate(distance)))
