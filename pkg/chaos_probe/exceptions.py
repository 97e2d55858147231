class ChaosProbeError(Exception):
    """Generic chaos_probe exception."""


class CapacityError(ChaosProbeError, MemoryError):
    """Chain too long for the dense memory guard."""


class SiteIndexError(ChaosProbeError, IndexError):
    """Site label outside 1..L."""


class DimensionMismatchError(ChaosProbeError, ValueError):
    """Operators or states living on different spaces."""


class NotHermitianError(ChaosProbeError, ValueError):
    """Hermitian input required."""


class SectorError(ChaosProbeError, ValueError):
    """Symmetry sector label out of range."""


class SpectrumTooShortError(ChaosProbeError, ValueError):
    """Fewer than three usable levels for ratio statistics."""


class StateNormError(ChaosProbeError, ValueError):
    """State vector not normalized."""


class DecoherenceBoundError(ChaosProbeError, ValueError):
    """Decoherence factor outside the unit disc."""


class DensityMatrixError(ChaosProbeError, ValueError):
    """Matrix is not a valid density matrix."""


class DegenerateCurveError(ChaosProbeError, ValueError):
    """Constant sequence cannot be normalized."""


class ConfigValidationError(ChaosProbeError, ValueError):
    """Run config rejected, names the offending field."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message

    def __reduce__(self) -> tuple[type, tuple[str, str]]:
        return type(self), (self.field, self.message)


class NumericalError(ChaosProbeError, ArithmeticError):
    """Numerical routine failed to deliver a trustworthy result."""


class PhaseTrackingError(NumericalError):
    """Time grid too coarse to follow the probe eigenvector."""


class SymmetryViolationError(ChaosProbeError):
    """Operator leaks out of the requested symmetry sector."""

    def __init__(
        self,
        leakage: float,
        tolerance: float,
        parameter: float | None = None,
    ) -> None:
        where = "" if parameter is None else f" at sweep value {parameter:g}"
        super().__init__(
            f"sector leakage {leakage:.3e} above tolerance {tolerance:.1e}{where}",
        )
        self.leakage = leakage
        self.tolerance = tolerance
        self.parameter = parameter

    def __reduce__(self) -> tuple[type, tuple[float, float, float | None]]:
        return type(self), (self.leakage, self.tolerance, self.parameter)
