"""Ratio statistics of adjacent level spacings and the chaos indicator eta."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from chaos_probe.exceptions import SpectrumTooShortError
from chaos_probe.spectral.eigen import Eigensystem

# mean of min(s_n, s_{n-1}) / max(s_n, s_{n-1}) for Poisson and GOE spectra
POISSON_RATIO = 0.386
WIGNER_DYSON_RATIO = 0.5307
DEGENERACY_TOL = 1e-10


@dataclass(frozen=True)
class SpectralStats:
    spacings: NDArray[np.float64] = field(repr=False)
    ratios: NDArray[np.float64] = field(repr=False)
    mean_ratio: float
    eta: float

    @property
    def in_range(self) -> bool:
        """False for spectra beyond the Poisson / Wigner-Dyson anchors."""
        return 0.0 <= self.eta <= 1.0


def chaos_indicator(mean_ratio: float) -> float:
    """Affine map of the mean ratio: Poisson -> 0, Wigner-Dyson -> 1. Not clamped."""
    return (mean_ratio - POISSON_RATIO) / (WIGNER_DYSON_RATIO - POISSON_RATIO)


def spectrum_statistics(values: ArrayLike, degeneracy_tol: float = DEGENERACY_TOL) -> SpectralStats:
    """
    Spacing ratios of a spectrum.

    Spacings below ``degeneracy_tol`` times the spectral width are dropped
    before ratios are formed.

    :param values: energy levels, any order.
    :param degeneracy_tol: relative degeneracy threshold.
    :returns: spectral statistics.
    :raises SpectrumTooShortError: with fewer than three usable levels.
    """
    levels = np.sort(np.asarray(values, dtype=np.float64), kind="stable")
    if levels.size < 3:
        raise SpectrumTooShortError(f"need at least 3 levels, got {levels.size}")
    width = levels[-1] - levels[0]
    spacings = np.diff(levels)
    spacings = spacings[spacings >= degeneracy_tol * width]
    if width <= 0 or spacings.size < 2:
        raise SpectrumTooShortError("fewer than 3 non-degenerate levels")

    ratios = np.minimum(spacings[1:], spacings[:-1]) / np.maximum(spacings[1:], spacings[:-1])
    mean_ratio = float(ratios.mean())
    return SpectralStats(
        spacings=spacings,
        ratios=ratios,
        mean_ratio=mean_ratio,
        eta=chaos_indicator(mean_ratio),
    )


def level_statistics(es: Eigensystem) -> SpectralStats:
    return spectrum_statistics(es.values)


def central_levels(values: ArrayLike, fraction: float = 0.5) -> NDArray[np.float64]:
    """
    Middle ``fraction`` of a sorted spectrum, trimming the edges symmetrically.

    :param values: energy levels.
    :param fraction: share of levels kept, in (0, 1].
    :returns: sorted central levels.
    """
    levels = np.sort(np.asarray(values, dtype=np.float64))
    drop = int(round(levels.size * (1 - fraction) / 2))
    return levels[drop : levels.size - drop]
