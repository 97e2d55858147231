"""Many-body operators: Pauli embeddings and the environment Hamiltonians."""
from chaos_probe.operators.hamiltonians import (
    build_coupling,
    build_environment,
    build_total,
    total_magnetization,
)
from chaos_probe.operators.models import (
    DEFAULT_COUPLING,
    EnvironmentConfig,
    HeisenbergConfig,
    IsingConfig,
    LongRangeConfig,
    ProbeConfig,
    XXZConfig,
    sweepable_parameters,
    with_parameter,
)
from chaos_probe.operators.pauli import HamiltonianBuilder, embed_pauli, pauli_action
from chaos_probe.operators.register import Operator, SpinRegister

__all__ = [
    "DEFAULT_COUPLING",
    "EnvironmentConfig",
    "HamiltonianBuilder",
    "HeisenbergConfig",
    "IsingConfig",
    "LongRangeConfig",
    "Operator",
    "ProbeConfig",
    "SpinRegister",
    "XXZConfig",
    "build_coupling",
    "build_environment",
    "build_total",
    "embed_pauli",
    "pauli_action",
    "sweepable_parameters",
    "total_magnetization",
    "with_parameter",
]
