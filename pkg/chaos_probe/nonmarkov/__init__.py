"""Non-Markovianity measures built on the trace distance."""
from chaos_probe.nonmarkov.measures import (
    DistinguishabilityTrace,
    blp_measure,
    dephasing_pair_trace,
    distinguishability,
    largest_revival_measure,
    trace_distance,
)

__all__ = [
    "DistinguishabilityTrace",
    "blp_measure",
    "dephasing_pair_trace",
    "distinguishability",
    "largest_revival_measure",
    "trace_distance",
]
