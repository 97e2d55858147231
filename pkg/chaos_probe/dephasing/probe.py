"""Reduced probe state under the dephasing interaction."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

from chaos_probe.exceptions import DecoherenceBoundError
from chaos_probe.operators.models import ProbeConfig

BOUND_TOL = 1e-9


def reduced_states(
    probe: ProbeConfig,
    values: ArrayLike,
    times: ArrayLike,
) -> NDArray[np.complex128]:
    """
    Probe density matrices along a decoherence trace.

    Populations stay at cos^2(theta/2), sin^2(theta/2); the coherence is
    (sin theta / 2) exp(-i(omega t + phi)) r(t).

    :param probe: probe parameters.
    :param values: decoherence factors r(t_i).
    :param times: matching times t_i.
    :returns: array of shape (n, 2, 2).
    :raises DecoherenceBoundError: if some |r| exceeds 1.
    """
    r = np.atleast_1d(np.asarray(values, dtype=np.complex128))
    t = np.atleast_1d(np.asarray(times, dtype=np.float64))
    if np.any(np.abs(r) > 1 + BOUND_TOL):
        raise DecoherenceBoundError(f"|r| reaches {np.max(np.abs(r)):.12f} > 1")

    coherence = 0.5 * np.sin(probe.theta) * np.exp(-1j * (probe.omega * t + probe.phi)) * r
    states = np.empty((r.size, 2, 2), dtype=np.complex128)
    states[:, 0, 0] = np.cos(probe.theta / 2) ** 2
    states[:, 1, 1] = np.sin(probe.theta / 2) ** 2
    states[:, 0, 1] = coherence
    states[:, 1, 0] = coherence.conj()
    return states


def reduced_state(probe: ProbeConfig, r: complex, t: float) -> NDArray[np.complex128]:
    return reduced_states(probe, [r], [t])[0]
