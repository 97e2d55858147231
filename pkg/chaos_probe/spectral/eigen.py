"""Dense Hermitian diagonalization."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from chaos_probe.exceptions import NotHermitianError, NumericalError
from chaos_probe.logging import logger
from chaos_probe.operators.register import Operator


@dataclass(frozen=True)
class Eigensystem:
    """Ascending eigenvalues and, optionally, the orthonormal eigenvector columns."""

    values: NDArray[np.float64]
    vectors: NDArray[np.inexact] | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return int(self.values.shape[0])

    def propagator_phases(
        self,
        times: NDArray[np.float64],
        sign: float = -1.0,
    ) -> NDArray[np.complex128]:
        """exp(sign * i * e_n * t) as an array of shape (dim, len(times))."""
        return np.exp(sign * 1j * np.outer(self.values, times))


def fix_phases(vectors: NDArray[np.inexact]) -> NDArray[np.inexact]:
    """
    Make the largest-magnitude component of every column real and positive.

    :param vectors: matrix whose columns are eigenvectors.
    :returns: rephased copy.
    """
    pivots = vectors[np.argmax(np.abs(vectors), axis=0), np.arange(vectors.shape[1])]
    phases = np.ones_like(pivots)
    nonzero = pivots != 0
    phases[nonzero] = np.abs(pivots[nonzero]) / pivots[nonzero]
    return vectors * phases


def diagonalize(H: Operator, vectors: bool = True) -> Eigensystem:
    """
    Full eigensystem of a Hermitian operator.

    :param H: Hermitian operator.
    :param vectors: also compute eigenvectors.
    :returns: eigensystem with ascending values.
    :raises NotHermitianError: if H is not flagged Hermitian.
    :raises NumericalError: if the eigensolver does not converge.
    """
    if not H.hermitian:
        raise NotHermitianError("diagonalize needs a Hermitian operator")
    logger.debug(f"Diagonalizing dim={H.dim} (vectors={vectors})")
    try:
        if vectors:
            values, vecs = scipy.linalg.eigh(H.entries, check_finite=True)
        else:
            values = scipy.linalg.eigh(H.entries, eigvals_only=True, check_finite=True)
            vecs = None
    except (np.linalg.LinAlgError, ValueError) as e:
        raise NumericalError(f"eigensolver failed on dim={H.dim}: {e!s}") from e

    order = np.argsort(values, kind="stable")
    values = np.asarray(values[order], dtype=np.float64)
    if vecs is not None:
        vecs = fix_phases(vecs[:, order])
    return Eigensystem(values=values, vectors=vecs)
