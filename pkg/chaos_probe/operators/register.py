"""Spin register and the dense operator container."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from chaos_probe.exceptions import (
    CapacityError,
    DimensionMismatchError,
    NotHermitianError,
    SiteIndexError,
)
from chaos_probe.settings import settings

HERMITIAN_RTOL = 1e-12


@dataclass(frozen=True)
class SpinRegister:
    """
    Register of L spin-1/2 environment sites.

    Sites are labelled 1..L, site 1 being the most significant tensor factor.
    The probe is site 0 and never lives in the register.
    """

    L: int

    def __post_init__(self) -> None:
        if self.L < 1:
            raise CapacityError(f"a register needs at least one spin, got L={self.L}")
        if self.L > settings.max_spins:
            raise CapacityError(
                f"L={self.L} exceeds the dense memory guard of {settings.max_spins} "
                "spins (raise CHAOS_PROBE_MAX_SPINS to override)",
            )

    @property
    def dim(self) -> int:
        return 1 << self.L

    def check_site(self, site: int) -> int:
        """
        Validate a site label.

        :param site: 1-based site label.
        :returns: bit position of the site inside a basis index.
        :raises SiteIndexError: if the site is outside 1..L.
        """
        if not 1 <= site <= self.L:
            raise SiteIndexError(f"site {site} outside 1..{self.L}")
        return self.L - site

    def basis(self) -> NDArray[np.int64]:
        return np.arange(self.dim, dtype=np.int64)

    def occupations(self) -> NDArray[np.int64]:
        """Bit table of shape (dim, L); entry 1 means spin down at that site."""
        shifts = np.arange(self.L - 1, -1, -1, dtype=np.int64)
        return (self.basis()[:, None] >> shifts) & 1


@dataclass(frozen=True)
class Operator:
    """Dense square matrix over a register space with a Hermitian flag."""

    entries: NDArray[np.inexact] = field(repr=False)
    hermitian: bool = False

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionMismatchError(f"operator must be square, got {entries.shape}")
        if not np.iscomplexobj(entries):
            entries = entries.astype(np.float64, copy=False)
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)
        if self.hermitian and not _is_hermitian(entries):
            raise NotHermitianError("entries violate the Hermitian flag")

    @classmethod
    def from_array(cls, entries: ArrayLike, hermitian: bool | None = None) -> Operator:
        """
        Wrap an array, detecting Hermiticity when the flag is not given.

        :param entries: square matrix.
        :param hermitian: explicit flag, or None to test the entries.
        :returns: operator.
        """
        array = np.array(entries)
        if hermitian is None:
            hermitian = _is_hermitian(array)
        return cls(array, hermitian=hermitian)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def max_norm(self) -> float:
        return float(np.max(np.abs(self.entries))) if self.entries.size else 0.0

    def dagger(self) -> Operator:
        return Operator(self.entries.conj().T, hermitian=self.hermitian)

    def commutator(self, other: Operator) -> Operator:
        self._check_dim(other)
        return Operator(self.entries @ other.entries - other.entries @ self.entries)

    def __add__(self, other: Operator) -> Operator:
        self._check_dim(other)
        return Operator(
            self.entries + other.entries,
            hermitian=self.hermitian and other.hermitian,
        )

    def __sub__(self, other: Operator) -> Operator:
        self._check_dim(other)
        return Operator(
            self.entries - other.entries,
            hermitian=self.hermitian and other.hermitian,
        )

    def __mul__(self, scalar: float) -> Operator:
        return Operator(
            self.entries * scalar,
            hermitian=self.hermitian and bool(np.isreal(scalar)),
        )

    __rmul__ = __mul__

    def __matmul__(self, other: Operator) -> Operator:
        self._check_dim(other)
        return Operator(self.entries @ other.entries)

    def _check_dim(self, other: Operator) -> None:
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dimensions differ: {self.dim} vs {other.dim}")


def _is_hermitian(entries: NDArray[np.inexact], block: int = 1024) -> bool:
    if entries.size == 0:
        return True
    scale = float(np.max(np.abs(entries)))
    if scale == 0.0:
        return True
    # row blocks keep the temporaries small at the memory guard
    deviation = 0.0
    for start in range(0, entries.shape[0], block):
        rows = entries[start : start + block]
        cols = entries[:, start : start + block].conj().T
        deviation = max(deviation, float(np.max(np.abs(rows - cols))))
    return deviation <= HERMITIAN_RTOL * scale
