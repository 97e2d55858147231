"""Decoherence factor of the probe, its averages and the reduced probe state."""
from chaos_probe.dephasing.factors import (
    DecoherenceTrace,
    PerturbedEigensystems,
    averaged_decoherence_factor,
    averaged_trace,
    effective_decoherence_factor,
    effective_values,
    haar_averaged_le,
    period_means,
    perturbed_eigensystems,
    sampled_decoherence_factor,
    sampled_trace,
    sampled_values,
)
from chaos_probe.dephasing.grid import TimeGrid
from chaos_probe.dephasing.probe import reduced_state, reduced_states
from chaos_probe.dephasing.states import (
    DISORDER_STREAM,
    DYNAMICS_STREAM,
    PROBE_STREAM,
    derive_rng,
    haar_random_state,
    haar_random_states,
    random_product_state,
)

__all__ = [
    "DISORDER_STREAM",
    "DYNAMICS_STREAM",
    "PROBE_STREAM",
    "DecoherenceTrace",
    "PerturbedEigensystems",
    "TimeGrid",
    "averaged_decoherence_factor",
    "averaged_trace",
    "derive_rng",
    "effective_decoherence_factor",
    "effective_values",
    "haar_averaged_le",
    "haar_random_state",
    "haar_random_states",
    "period_means",
    "perturbed_eigensystems",
    "random_product_state",
    "reduced_state",
    "reduced_states",
    "sampled_decoherence_factor",
    "sampled_trace",
    "sampled_values",
]
