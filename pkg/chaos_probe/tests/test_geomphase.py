import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chaos_probe.dephasing import TimeGrid, effective_decoherence_factor, perturbed_eigensystems
from chaos_probe.dephasing.factors import DecoherenceTrace
from chaos_probe.exceptions import DegenerateCurveError, PhaseTrackingError
from chaos_probe.geomphase import (
    ProbeTrajectory,
    accumulated_phase,
    geometric_phase,
    kinematic_phase,
    normalize_curve,
    phase_correction,
    phase_per_period,
    probe_trajectory,
    unitary_phase,
    unitary_phase_curve,
)
from chaos_probe.operators import (
    IsingConfig,
    ProbeConfig,
    SpinRegister,
    build_coupling,
    build_environment,
)


def constant_trace(grid: TimeGrid, value: complex = 1.0) -> DecoherenceTrace:
    values = np.full(grid.size, value, dtype=np.complex128)
    values[0] = 1.0
    return DecoherenceTrace(grid=grid, values=values, kind="effective")


def ising_trace(grid: TimeGrid, L: int = 3, g: float = 0.2) -> DecoherenceTrace:
    reg = SpinRegister(L)
    env = build_environment(IsingConfig(hx=1.0, hz=0.5, J=1.0), reg)
    return effective_decoherence_factor(perturbed_eigensystems(env, build_coupling(g, reg)), grid)


def modulated_trace(grid: TimeGrid, magnitude: float, depth: float) -> DecoherenceTrace:
    """Trace repeating with the probe period, so every period closes the same loop."""
    values = magnitude * (1 - depth + depth * np.exp(1j * grid.omega * grid.times))
    return DecoherenceTrace(grid=grid, values=values, kind="sampled")


def test_unitary_phase() -> None:
    assert unitary_phase(math.pi / 2, 1) == pytest.approx(math.pi)
    assert unitary_phase(0.0, 3) == pytest.approx(6 * math.pi)
    assert unitary_phase(3 * math.pi / 7, 20) == pytest.approx(76.81, abs=0.01)
    with pytest.raises(ValueError):
        unitary_phase(1.0, 0)


@pytest.mark.parametrize("theta", [0.3, 3 * math.pi / 8, math.pi / 2, 2.0, 2.9])
@pytest.mark.parametrize("periods", [1, 7, 30])
def test_unitary_limit(theta: float, periods: int) -> None:
    grid = TimeGrid(omega=1.0, periods=periods, steps_per_period=200)
    probe = ProbeConfig(theta=theta, phi=0.4, g=0.0)
    result = geometric_phase(probe, constant_trace(grid))
    assert result.phi_u == periods * math.pi * (1 + math.cos(theta))
    assert abs(result.delta) < 1e-6
    assert result.periods == periods


def test_unitary_phase_curve_matches_accumulated_phase() -> None:
    grid = TimeGrid(omega=1.7, periods=3, steps_per_period=200)
    probe = ProbeConfig(omega=1.7, theta=1.2)
    curve = accumulated_phase(probe_trajectory(probe, constant_trace(grid)))
    reference = unitary_phase_curve(probe.theta, probe.omega, grid.times)
    np.testing.assert_allclose(curve, reference, atol=1e-9)
    assert reference[grid.period_end(2)] == pytest.approx(unitary_phase(1.2, 2), rel=1e-12)


def test_phase_per_period_in_unitary_limit() -> None:
    grid = TimeGrid(omega=1.0, periods=4, steps_per_period=200)
    probe = ProbeConfig(theta=1.0)
    phi, abs_delta = phase_per_period(probe, constant_trace(grid))
    np.testing.assert_allclose(phi, [unitary_phase(1.0, n) for n in range(1, 5)], rtol=1e-9)
    assert np.all(abs_delta < 1e-6)


def test_trajectory_of_pure_precession() -> None:
    grid = TimeGrid(omega=1.0, periods=1, steps_per_period=100)
    theta = 0.9
    traj = probe_trajectory(ProbeConfig(theta=theta), constant_trace(grid))
    np.testing.assert_allclose(traj.lambda_plus, 1.0, atol=1e-12)
    i = 37
    t = grid.times[i]
    expected = np.array([math.cos(theta / 2), math.sin(theta / 2) * np.exp(1j * t)])
    assert abs(np.vdot(expected, traj.psi_plus[i])) == pytest.approx(1.0, abs=1e-12)


def test_trajectory_eigen_relations() -> None:
    grid = TimeGrid(omega=1.0, periods=2, steps_per_period=50)
    probe = ProbeConfig(theta=1.3, phi=0.2)
    trace = ising_trace(grid)
    traj = probe_trajectory(probe, trace)
    bloch_sq = math.cos(probe.theta) ** 2 + math.sin(probe.theta) ** 2 * trace.magnitude**2
    np.testing.assert_allclose(traj.lambda_plus, 0.5 * (1 + np.sqrt(bloch_sq)), atol=1e-12)
    assert traj.lambda_plus[0] == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(np.linalg.norm(traj.psi_plus, axis=1), 1.0, atol=1e-12)
    image = np.einsum("nij,nj->ni", traj.states, traj.psi_plus)
    residual = image - traj.lambda_plus[:, None] * traj.psi_plus
    assert np.max(np.abs(residual)) < 1e-10
    assert np.all(np.abs(traj.overlaps()) > 0.5)


def test_trajectory_after_full_dephasing() -> None:
    grid = TimeGrid(omega=1.0, periods=1, steps_per_period=20)
    traj = probe_trajectory(ProbeConfig(theta=1.0), constant_trace(grid, 0.0))
    np.testing.assert_allclose(np.abs(traj.psi_plus[1:, 0]), 1.0, atol=1e-12)
    assert kinematic_phase(traj) == pytest.approx(0.0, abs=1e-12)


def test_degenerate_samples_are_bridged() -> None:
    grid = TimeGrid(omega=1.0, periods=1, steps_per_period=20)
    values = np.ones(grid.size, dtype=np.complex128)
    values[5] = 0.0
    trace = DecoherenceTrace(grid=grid, values=values, kind="sampled")
    traj = probe_trajectory(ProbeConfig(theta=math.pi / 2), trace)
    assert traj.degenerate.tolist() == [i == 5 for i in range(grid.size)]
    np.testing.assert_array_equal(traj.psi_plus[5], traj.psi_plus[4])
    assert traj.lambda_plus[5] == pytest.approx(0.5)


def test_constant_trajectory_has_no_phase() -> None:
    grid = TimeGrid(omega=1.0, periods=1, steps_per_period=10)
    psi = np.tile(np.array([0.6, 0.8j]), (grid.size, 1))
    chi = np.linspace(0.0, 5.0, grid.size)
    traj = ProbeTrajectory(
        grid=grid,
        states=np.zeros((grid.size, 2, 2), dtype=np.complex128),
        lambda_plus=np.ones(grid.size),
        psi_plus=psi * np.exp(1j * chi)[:, None],
        degenerate=np.zeros(grid.size, dtype=bool),
    )
    assert kinematic_phase(traj) == pytest.approx(0.0, abs=1e-12)


def test_gauge_invariance(rng: np.random.Generator) -> None:
    grid = TimeGrid(omega=1.0, periods=3, steps_per_period=100)
    traj = probe_trajectory(ProbeConfig(theta=1.1), ising_trace(grid))
    phases = np.exp(1j * rng.uniform(0, 2 * math.pi, size=grid.size))
    regauged = ProbeTrajectory(
        grid=traj.grid,
        states=traj.states,
        lambda_plus=traj.lambda_plus,
        psi_plus=traj.psi_plus * phases[:, None],
        degenerate=traj.degenerate,
    )
    assert kinematic_phase(regauged) == pytest.approx(kinematic_phase(traj), abs=1e-10)


def test_phase_tracking_failure() -> None:
    grid = TimeGrid(omega=1.0, periods=1, steps_per_period=4)
    psi = np.array([[1, 0], [1, 0], [0, 1], [0, 1], [0, 1]], dtype=np.complex128)
    traj = ProbeTrajectory(
        grid=grid,
        states=np.zeros((5, 2, 2), dtype=np.complex128),
        lambda_plus=np.ones(5),
        psi_plus=psi,
        degenerate=np.zeros(5, dtype=bool),
    )
    with pytest.raises(PhaseTrackingError):
        kinematic_phase(traj)


@settings(max_examples=25, deadline=None)
@given(
    theta=st.floats(min_value=0.2, max_value=2.9),
    magnitude=st.floats(min_value=0.3, max_value=1.0),
    depth=st.floats(min_value=0.0, max_value=0.25),
    periods=st.integers(min_value=2, max_value=6),
)
def test_phase_adds_over_repeated_periods(
    theta: float,
    magnitude: float,
    depth: float,
    periods: int,
) -> None:
    probe = ProbeConfig(theta=theta, phi=0.3)
    single = modulated_trace(TimeGrid(1.0, 1, 200), magnitude, depth)
    one = kinematic_phase(probe_trajectory(probe, single))
    grid = TimeGrid(1.0, periods, 200)
    curve = accumulated_phase(probe_trajectory(probe, modulated_trace(grid, magnitude, depth)))
    ends = [grid.period_end(k) for k in range(1, periods + 1)]
    np.testing.assert_allclose(curve[ends], one * np.arange(1, periods + 1), atol=1e-8)


@pytest.mark.parametrize("periods", [3, 20])
def test_grid_refinement_converges(periods: int) -> None:
    probe = ProbeConfig(theta=3 * math.pi / 7)
    coarse, fine, finest = (
        kinematic_phase(probe_trajectory(probe, ising_trace(TimeGrid(1.0, periods, steps), L=5)))
        for steps in (100, 200, 400)
    )
    assert abs(fine - finest) < 1e-8
    assert abs(coarse - finest) < 1e-6


def test_phase_correction() -> None:
    assert phase_correction(5.0, 5.0) == 0.0
    assert phase_correction(0.0, 5.0) == 1.0
    assert phase_correction(4.5, 5.0) == pytest.approx(0.1)
    with pytest.raises(ValueError):
        phase_correction(1.0, 0.0)


def test_normalize_curve() -> None:
    np.testing.assert_allclose(normalize_curve([2, 4, 6], "inverted"), [1, 0.5, 0])
    np.testing.assert_allclose(normalize_curve([2, 4, 6], "direct"), [0, 0.5, 1])
    out = normalize_curve([3.3, -1.2, 7.9, 0.4], "direct")
    assert out.min() == 0.0
    assert out.max() == 1.0
    with pytest.raises(DegenerateCurveError):
        normalize_curve([1.0, 1.0, 1.0])
    with pytest.raises(ValueError):
        normalize_curve([1.0, 2.0], "sideways")  # type: ignore[arg-type]
