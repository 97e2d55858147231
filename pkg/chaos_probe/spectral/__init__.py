"""Exact diagonalization, symmetry sectors and spacing-ratio statistics."""
from chaos_probe.spectral.eigen import Eigensystem, diagonalize, fix_phases
from chaos_probe.spectral.sectors import (
    SymmetrySector,
    magnetization_parity_sector,
    magnetization_parity_sectors,
    magnetization_sector,
    parity_operator,
    parity_permutation,
    parity_sector,
    parity_sectors,
    restrict,
)
from chaos_probe.spectral.statistics import (
    POISSON_RATIO,
    WIGNER_DYSON_RATIO,
    SpectralStats,
    central_levels,
    chaos_indicator,
    level_statistics,
    spectrum_statistics,
)

__all__ = [
    "POISSON_RATIO",
    "WIGNER_DYSON_RATIO",
    "Eigensystem",
    "SpectralStats",
    "SymmetrySector",
    "central_levels",
    "chaos_indicator",
    "diagonalize",
    "fix_phases",
    "level_statistics",
    "magnetization_parity_sector",
    "magnetization_parity_sectors",
    "magnetization_sector",
    "parity_operator",
    "parity_permutation",
    "parity_sector",
    "parity_sectors",
    "restrict",
    "spectrum_statistics",
]
