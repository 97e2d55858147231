"""Run configuration read from JSON."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from chaos_probe.operators.models import (
    DEFAULT_COUPLING,
    EnvironmentConfig,
    HeisenbergConfig,
    IsingConfig,
    ProbeConfig,
    sweepable_parameters,
    with_parameter,
)
from chaos_probe.spectral.sectors import LEAKAGE_TOL

Experiment = Literal["trace", "phase-sweep", "eta-sweep", "nonmarkov", "convergence", "le"]

# experiments that need a sweep grid
SWEEP_EXPERIMENTS = {"phase-sweep", "eta-sweep", "nonmarkov"}


class _Schema(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class SweepSpec(_Schema):
    parameter: str
    values: list[float] = Field(min_length=1)


class SectorSpec(_Schema):
    """Symmetry block used for level statistics."""

    kind: Literal["full", "parity", "magnetization"] = "full"
    n: int | None = Field(None, ge=0)
    parity: Literal["even", "odd"] | None = None

    @model_validator(mode="after")
    def _complete(self) -> SectorSpec:
        if self.kind == "magnetization" and self.n is None:
            raise ValueError("a magnetization sector needs n")
        if self.kind == "parity" and self.parity is None:
            raise ValueError("a parity sector needs parity even or odd")
        if self.kind == "full" and (self.n is not None or self.parity is not None):
            raise ValueError("the full space takes neither n nor parity")
        return self


class SpectralSpec(_Schema):
    """Exact-diagonalization sub-run producing eta along the sweep grid."""

    L: int = Field(ge=3)
    sector: SectorSpec = SectorSpec()
    realizations: int = Field(1, ge=1)
    leakage_tol: float = Field(LEAKAGE_TOL, gt=0)
    central_fraction: float = Field(1.0, gt=0, le=1)


class RunConfig(_Schema):
    experiment: Experiment
    model: EnvironmentConfig = Field(default_factory=IsingConfig)
    probe: ProbeConfig = ProbeConfig()
    L: int = Field(9, ge=1)
    periods: int = Field(20, ge=1)
    steps_per_period: int = Field(200, ge=4)
    realizations: int = Field(100, ge=1)
    seed: int = Field(0, ge=0, lt=2**64)
    sweep: SweepSpec | None = None
    spectral: SpectralSpec | None = None
    random_probe: bool = False
    convergence_realizations: list[int] = Field(default_factory=lambda: [1, 10, 100], min_length=1)
    t_max: float | None = Field(None, gt=0)

    @model_validator(mode="after")
    def _consistent(self) -> RunConfig:
        if self.probe.g is None:
            self.probe = self.probe.model_copy(update={"g": DEFAULT_COUPLING[self.model.kind]})
        if self.sweep is not None:
            allowed = sweepable_parameters(type(self.model))
            if self.sweep.parameter not in allowed:
                raise ValueError(
                    f"sweep parameter {self.sweep.parameter!r} is not a {self.model.kind} "
                    f"parameter, expected one of {sorted(allowed)}",
                )
        if self.experiment in SWEEP_EXPERIMENTS and self.sweep is None:
            raise ValueError(f"experiment {self.experiment} needs a sweep")
        if self.experiment == "trace" and self.sweep is not None:
            raise ValueError("experiment trace runs a single parameter point, drop the sweep")
        if self.experiment == "eta-sweep" and self.spectral is None:
            raise ValueError("experiment eta-sweep needs a spectral section")
        if any(count < 1 for count in self.convergence_realizations):
            raise ValueError("convergence_realizations must be positive")
        return self

    @property
    def has_disorder(self) -> bool:
        return isinstance(self.model, HeisenbergConfig) and self.model.fields_z is None

    def points(self) -> list[tuple[float | None, EnvironmentConfig]]:
        """Sweep values with the model record for each, or the single configured point."""
        if self.sweep is None:
            return [(None, self.model)]
        return [
            (value, with_parameter(self.model, self.sweep.parameter, value))  # type: ignore[misc]
            for value in self.sweep.values
        ]
