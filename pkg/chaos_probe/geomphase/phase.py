"""Accumulated geometric phase of the probe and its correction to the unitary value."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.polynomial.legendre import leggauss
from numpy.typing import ArrayLike, NDArray
from scipy.integrate import cumulative_trapezoid
from scipy.interpolate import make_interp_spline

from chaos_probe.dephasing.factors import DecoherenceTrace
from chaos_probe.exceptions import DegenerateCurveError, PhaseTrackingError
from chaos_probe.geomphase.trajectory import ProbeTrajectory, probe_trajectory
from chaos_probe.logging import logger
from chaos_probe.operators.models import ProbeConfig

OVERLAP_FLOOR = 1e-6
# |psi_1| below which the azimuth is undefined (north pole)
POLE_TOL = 1e-12
# quintic interpolants; Gauss-Legendre with as many nodes is exact on their products
SPLINE_DEGREE = 5
GAUSS_NODES, GAUSS_WEIGHTS = leggauss(SPLINE_DEGREE)

Orientation = Literal["inverted", "direct"]


@dataclass(frozen=True)
class PhaseResult:
    phi: float
    phi_u: float
    delta: float
    periods: int


def unitary_phase(theta: float, N: int) -> float:
    """Phase of N closed precessions at polar angle theta, N pi (1 + cos theta)."""
    if N < 1:
        raise ValueError("N must be at least 1")
    return N * math.pi * (1 + math.cos(theta))


def unitary_phase_curve(theta: float, omega: float, times: ArrayLike) -> NDArray[np.float64]:
    """
    Geometric phase of the uncoupled precession accumulated up to every time.

    Equals ``unitary_phase(theta, N)`` at t = 2 pi N / omega.
    """
    t = np.asarray(times, dtype=np.float64)
    north = math.cos(theta / 2) ** 2
    south = math.sin(theta / 2) ** 2
    return np.angle(north * np.exp(-1j * omega * t) + south) + north * omega * t


def _bloch_angles(psi: NDArray[np.complex128]) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Polar and unwrapped azimuthal angle of every sample, both gauge invariant."""
    cos_alpha = np.clip(np.abs(psi[:, 0]) ** 2 - np.abs(psi[:, 1]) ** 2, -1.0, 1.0)
    cross = psi[:, 1] * psi[:, 0].conj()
    beta = np.angle(cross)
    defined = np.flatnonzero(np.abs(cross) >= POLE_TOL)
    if defined.size == 0:
        return np.arccos(cos_alpha), np.zeros_like(beta)
    if defined.size < beta.size:
        # at the poles the azimuth is undefined, hold the last defined value
        source = np.zeros(beta.size, dtype=np.int64)
        source[defined] = defined
        source = np.maximum.accumulate(source)
        source[: defined[0]] = defined[0]
        beta = beta[source]
    return np.arccos(cos_alpha), np.unwrap(beta)


def _check_tracking(traj: ProbeTrajectory) -> None:
    magnitudes = np.abs(traj.overlaps())
    if magnitudes.size and magnitudes.min() < OVERLAP_FLOOR:
        where = int(np.argmin(magnitudes))
        raise PhaseTrackingError(
            f"overlap {magnitudes[where]:.2e} between samples {where} and {where + 1}, "
            "refine the grid",
        )
    if magnitudes.size and magnitudes.min() < 0.5:
        logger.warning(f"Consecutive overlap drops to {magnitudes.min():.3f}, grid is coarse")


def _dynamical_phase(
    times: NDArray[np.float64],
    weight: NDArray[np.float64],
    beta: NDArray[np.float64],
) -> NDArray[np.float64]:
    """Cumulative integral of weight d beta, sixth order in the grid step."""
    if times.size <= SPLINE_DEGREE:
        return cumulative_trapezoid(weight, beta, initial=0.0)
    weight_spline = make_interp_spline(times, weight, k=SPLINE_DEGREE)
    beta_rate = make_interp_spline(times, beta, k=SPLINE_DEGREE).derivative()
    half = 0.5 * np.diff(times)
    nodes = (0.5 * (times[1:] + times[:-1]))[:, None] + half[:, None] * GAUSS_NODES
    pieces = half * ((weight_spline(nodes) * beta_rate(nodes)) @ GAUSS_WEIGHTS)
    return np.concatenate(([0.0], np.cumsum(pieces)))


def accumulated_phase(traj: ProbeTrajectory) -> NDArray[np.float64]:
    """
    Geometric phase accumulated from t = 0 up to every grid time.

    Evaluated in the gauge where the |1> component of Psi_+ is real: the
    dynamical term is the integral of cos^2(alpha/2) d beta over the unwrapped
    azimuth, the total phase term the principal argument of
    <Psi_+(0)|Psi_+(t)> in that gauge. The integral runs over quintic
    interpolants of both angles.

    :param traj: probe trajectory.
    :returns: Phi(t_i).
    :raises PhaseTrackingError: if consecutive eigenvectors are nearly orthogonal.
    """
    _check_tracking(traj)
    alpha, beta = _bloch_angles(traj.psi_plus)
    weight = np.cos(alpha / 2) ** 2
    dynamical = _dynamical_phase(np.asarray(traj.grid.times), weight, beta)
    overlap = np.cos(alpha[0] / 2) * np.cos(alpha / 2) * np.exp(1j * (beta[0] - beta)) + np.sin(
        alpha[0] / 2,
    ) * np.sin(alpha / 2)
    return np.angle(overlap) + dynamical


def kinematic_phase(traj: ProbeTrajectory) -> float:
    """
    Total geometric phase Phi over the trajectory.

    :param traj: probe trajectory.
    :returns: Phi in radians, unwrapped.
    """
    return float(accumulated_phase(traj)[-1])


def phase_correction(phi: float, phi_u: float) -> float:
    """delta Phi = 1 - Phi / Phi_u."""
    if phi_u == 0:
        raise ValueError("unitary phase vanishes, the correction is undefined")
    return 1.0 - phi / phi_u


def normalize_curve(
    values: ArrayLike,
    orientation: Orientation = "inverted",
) -> NDArray[np.float64]:
    """
    Rescale a sweep curve onto [0, 1].

    ``inverted`` maps the maximum to 0 and the minimum to 1, ``direct`` keeps the
    orientation of the input.

    :param values: curve samples.
    :param orientation: ``inverted`` or ``direct``.
    :returns: rescaled curve.
    :raises DegenerateCurveError: for a constant curve.
    """
    curve = np.asarray(values, dtype=np.float64)
    top, bottom = curve.max(), curve.min()
    if not top > bottom:
        raise DegenerateCurveError("cannot normalize a constant curve")
    if orientation == "inverted":
        return (top - curve) / (top - bottom)
    if orientation == "direct":
        return (curve - bottom) / (top - bottom)
    raise ValueError(f"unknown orientation {orientation!r}")


def geometric_phase(probe: ProbeConfig, trace: DecoherenceTrace) -> PhaseResult:
    """
    Geometric phase of the probe over the full trace and its correction.

    :param probe: probe parameters.
    :param trace: decoherence factor on a whole-period grid.
    :returns: phase result.
    """
    phi = kinematic_phase(probe_trajectory(probe, trace))
    phi_u = unitary_phase(probe.theta, trace.grid.periods)
    return PhaseResult(
        phi=phi,
        phi_u=phi_u,
        delta=phase_correction(phi, phi_u),
        periods=trace.grid.periods,
    )


def phase_per_period(
    probe: ProbeConfig,
    trace: DecoherenceTrace,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Phi(N) and |delta Phi(N)| after every whole period N of the trace.

    :param probe: probe parameters.
    :param trace: decoherence factor on a whole-period grid.
    :returns: (phi, abs_delta), one entry per period.
    """
    curve = accumulated_phase(probe_trajectory(probe, trace))
    grid = trace.grid
    ends = [grid.period_end(period) for period in range(1, grid.periods + 1)]
    phi = curve[ends]
    phi_u = np.array([unitary_phase(probe.theta, period) for period in range(1, grid.periods + 1)])
    return phi, np.abs(1.0 - phi / phi_u)
