"""
Decoherence factor of the probe.

Both propagators are diagonal in the eigenbases of H_E -/+ H_SE, so every form
of the factor is evaluated from two diagonalizations at arbitrary times,
without time stepping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from numpy.typing import NDArray

from chaos_probe.dephasing.grid import TimeGrid
from chaos_probe.dephasing.states import DYNAMICS_STREAM, derive_rng, random_product_state
from chaos_probe.exceptions import DimensionMismatchError, StateNormError
from chaos_probe.logging import logger
from chaos_probe.operators.register import Operator, SpinRegister
from chaos_probe.spectral.eigen import Eigensystem, diagonalize

NORM_TOL = 1e-8
# time samples evaluated per matrix product
TIME_CHUNK = 1024

TraceKind = Literal["sampled", "averaged", "effective"]


@dataclass(frozen=True)
class PerturbedEigensystems:
    """Eigensystems of H_E - H_SE (xi_k) and H_E + H_SE (eta_l) with their overlaps."""

    minus: Eigensystem
    plus: Eigensystem
    overlaps: NDArray[np.inexact] = field(repr=False)

    @property
    def overlap_sq(self) -> NDArray[np.float64]:
        """|<xi_k|eta_l>|^2, a doubly stochastic matrix."""
        return np.abs(self.overlaps) ** 2

    @property
    def dim(self) -> int:
        return self.minus.dim


@dataclass(frozen=True)
class DecoherenceTrace:
    grid: TimeGrid
    values: NDArray[np.complex128] = field(repr=False)
    kind: TraceKind
    seed: int | None = None
    realizations: int | None = None

    @property
    def times(self) -> NDArray[np.float64]:
        return self.grid.times

    @property
    def magnitude(self) -> NDArray[np.float64]:
        return np.abs(self.values)

    @property
    def loschmidt_echo(self) -> NDArray[np.float64]:
        """M(t) = |r(t)|^2."""
        return self.magnitude**2


def perturbed_eigensystems(envH: Operator, coupling: Operator) -> PerturbedEigensystems:
    """
    Diagonalize H_E -/+ H_SE and form the overlap matrix <xi_k|eta_l>.

    :param envH: environment Hamiltonian.
    :param coupling: environment part of the interaction.
    :returns: both eigensystems and their overlaps.
    """
    if envH.dim != coupling.dim:
        raise DimensionMismatchError(
            f"environment dim {envH.dim} differs from coupling dim {coupling.dim}",
        )
    minus = diagonalize(envH - coupling)
    plus = diagonalize(envH + coupling)
    overlaps = minus.vectors.conj().T @ plus.vectors  # type: ignore[union-attr]
    return PerturbedEigensystems(minus=minus, plus=plus, overlaps=overlaps)


def _chunks(times: NDArray[np.float64]) -> list[slice]:
    return [slice(start, start + TIME_CHUNK) for start in range(0, times.size, TIME_CHUNK)]


def _pin_origin(values: NDArray[np.complex128], grid: TimeGrid) -> NDArray[np.complex128]:
    # U^dagger V is the identity at t = 0
    if grid.times[0] == 0.0:
        values[0] = 1.0
    return values


def effective_values(
    pe: PerturbedEigensystems,
    times: NDArray[np.float64],
) -> NDArray[np.complex128]:
    """2^-L sum_kl exp(-it(eta_l - xi_k)) |<xi_k|eta_l>|^2 at arbitrary times."""
    weights = pe.overlap_sq
    values = np.empty(times.size, dtype=np.complex128)
    for chunk in _chunks(times):
        forward = pe.plus.propagator_phases(times[chunk], sign=-1.0)
        backward = pe.minus.propagator_phases(times[chunk], sign=1.0)
        values[chunk] = np.sum(backward * (weights @ forward), axis=0) / pe.dim
    return values


def effective_decoherence_factor(pe: PerturbedEigensystems, grid: TimeGrid) -> DecoherenceTrace:
    """
    Decoherence factor of a maximally mixed environment, (1/2^L) Tr(U^dagger V).

    :param pe: perturbed eigensystems.
    :param grid: time grid.
    :returns: trace of kind ``effective``.
    """
    values = _pin_origin(effective_values(pe, grid.times), grid)
    return DecoherenceTrace(grid=grid, values=values, kind="effective")


def sampled_values(
    pe: PerturbedEigensystems,
    states: NDArray[np.complex128],
    times: NDArray[np.float64],
) -> NDArray[np.complex128]:
    """
    <psi| exp(it(H_E - H_SE)) exp(-it(H_E + H_SE)) |psi> for a batch of states.

    :param pe: perturbed eigensystems.
    :param states: state vectors as columns, shape (dim, R).
    :param times: times.
    :returns: array of shape (R, len(times)).
    """
    columns = states.reshape(pe.dim, -1)
    in_plus = pe.plus.vectors.conj().T @ columns  # type: ignore[union-attr]
    in_minus = pe.minus.vectors.conj().T @ columns  # type: ignore[union-attr]
    values = np.empty((columns.shape[1], times.size), dtype=np.complex128)
    for chunk in _chunks(times):
        forward = pe.plus.propagator_phases(times[chunk], sign=-1.0)
        backward = pe.minus.propagator_phases(times[chunk], sign=-1.0)
        for m in range(columns.shape[1]):
            # V|psi> and U|psi> expanded in the xi basis
            evolved_plus = pe.overlaps @ (in_plus[:, m, None] * forward)
            evolved_minus = in_minus[:, m, None] * backward
            values[m, chunk] = np.sum(evolved_minus.conj() * evolved_plus, axis=0)
    return values


def sampled_trace(
    pe: PerturbedEigensystems,
    state: NDArray[np.complex128],
    grid: TimeGrid,
    seed: int | None = None,
) -> DecoherenceTrace:
    """Single-state decoherence factor from precomputed eigensystems."""
    norm = float(np.linalg.norm(state))
    if abs(norm - 1.0) > NORM_TOL:
        raise StateNormError(f"state norm {norm:.12f} differs from 1")
    values = _pin_origin(sampled_values(pe, state, grid.times)[0], grid)
    return DecoherenceTrace(grid=grid, values=values, kind="sampled", seed=seed)


def sampled_decoherence_factor(
    envH: Operator,
    coupling: Operator,
    state: NDArray[np.complex128],
    grid: TimeGrid,
) -> DecoherenceTrace:
    """
    Decoherence factor r(t) = <eps_1(t)|eps_0(t)> for one environment state.

    :param envH: environment Hamiltonian.
    :param coupling: environment part of the interaction.
    :param state: normalized environment state.
    :param grid: time grid.
    :returns: trace of kind ``sampled``.
    :raises StateNormError: if the state is not normalized.
    """
    return sampled_trace(perturbed_eigensystems(envH, coupling), state, grid)


def _master_seed(rng: int | np.random.Generator) -> int:
    if isinstance(rng, np.random.Generator):
        return int(rng.integers(2**63))
    return int(rng)


def averaged_trace(
    pe: PerturbedEigensystems,
    realizations: int,
    grid: TimeGrid,
    seed: int,
    point: int = 0,
) -> DecoherenceTrace:
    """R-average of sampled traces from precomputed eigensystems."""
    if realizations < 1:
        raise ValueError("at least one realization is needed")
    reg = SpinRegister(pe.dim.bit_length() - 1)
    total = np.zeros(grid.size, dtype=np.complex128)
    for m in range(realizations):
        state = random_product_state(reg, derive_rng(seed, DYNAMICS_STREAM, point, m))
        total += sampled_trace(pe, state, grid).values
    logger.debug(f"Averaged {realizations} realizations at point {point}")
    return DecoherenceTrace(
        grid=grid,
        values=total / realizations,
        kind="averaged",
        seed=seed,
        realizations=realizations,
    )


def averaged_decoherence_factor(
    envH: Operator,
    coupling: Operator,
    R: int,
    grid: TimeGrid,
    rng: int | np.random.Generator,
) -> DecoherenceTrace:
    """
    Mean decoherence factor over R random product states.

    Realization m draws its state from ``derive_rng(seed, 0, 0, m)``, and the
    sum runs in realization order.

    :param envH: environment Hamiltonian.
    :param coupling: environment part of the interaction.
    :param R: number of realizations.
    :param grid: time grid.
    :param rng: master seed, or a generator a master seed is drawn from.
    :returns: trace of kind ``averaged``.
    """
    pe = perturbed_eigensystems(envH, coupling)
    return averaged_trace(pe, R, grid, _master_seed(rng))


def haar_averaged_le(pe: PerturbedEigensystems, grid: TimeGrid) -> NDArray[np.float64]:
    """
    Loschmidt echo averaged over Haar-random environment states.

    (2^L + |Tr(U^dagger V)|^2) / (2^L (2^L + 1)), with |Tr| = 2^L |r_e|.
    """
    dim = float(pe.dim)
    effective = effective_decoherence_factor(pe, grid).magnitude
    return (dim + (dim * effective) ** 2) / (dim * (dim + 1))


def period_means(trace: DecoherenceTrace, cumulative: bool = False) -> NDArray[np.float64]:
    """
    Mean of |r| per probe period.

    :param trace: decoherence trace.
    :param cumulative: average over [0, t_N] instead of the N-th period window.
    :returns: one value per period.
    """
    grid = trace.grid
    magnitude = trace.magnitude
    means = np.empty(grid.periods)
    for period in range(1, grid.periods + 1):
        start = 0 if cumulative else grid.period_end(period - 1)
        means[period - 1] = magnitude[start : grid.period_end(period) + 1].mean()
    return means
