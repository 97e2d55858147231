"""Geometric phase of the dephasing probe."""
from chaos_probe.geomphase.phase import (
    PhaseResult,
    accumulated_phase,
    geometric_phase,
    kinematic_phase,
    normalize_curve,
    phase_correction,
    phase_per_period,
    unitary_phase,
    unitary_phase_curve,
)
from chaos_probe.geomphase.trajectory import ProbeTrajectory, bloch_radius, probe_trajectory

__all__ = [
    "PhaseResult",
    "ProbeTrajectory",
    "accumulated_phase",
    "bloch_radius",
    "geometric_phase",
    "kinematic_phase",
    "normalize_curve",
    "phase_correction",
    "phase_per_period",
    "probe_trajectory",
    "unitary_phase",
    "unitary_phase_curve",
]
