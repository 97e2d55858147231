"""Per-realization building blocks shared by the experiment pipelines."""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from chaos_probe.cli.schemas import RunConfig
from chaos_probe.dephasing import (
    DISORDER_STREAM,
    DYNAMICS_STREAM,
    PROBE_STREAM,
    DecoherenceTrace,
    PerturbedEigensystems,
    TimeGrid,
    derive_rng,
    effective_decoherence_factor,
    effective_values,
    perturbed_eigensystems,
    random_product_state,
    sampled_trace,
)
from chaos_probe.operators import (
    EnvironmentConfig,
    HeisenbergConfig,
    ProbeConfig,
    SpinRegister,
    build_coupling,
    build_environment,
)


@dataclass(frozen=True)
class PointTask:
    """One sweep point of a run."""

    cfg: RunConfig
    point: int
    model: EnvironmentConfig


@dataclass(frozen=True)
class RealizationTask:
    """One random environment state (and disorder draw) at one sweep point."""

    cfg: RunConfig
    point: int
    model: EnvironmentConfig
    realization: int


def time_grid(cfg: RunConfig) -> TimeGrid:
    return TimeGrid(
        omega=cfg.probe.omega,
        periods=cfg.periods,
        steps_per_period=cfg.steps_per_period,
    )


def point_tasks(cfg: RunConfig) -> list[PointTask]:
    return [PointTask(cfg, point, model) for point, (_, model) in enumerate(cfg.points())]


def realization_tasks(cfg: RunConfig) -> list[RealizationTask]:
    """Task grid ordered by sweep point, then realization."""
    return [
        RealizationTask(cfg, task.point, task.model, m)
        for task in point_tasks(cfg)
        for m in range(cfg.realizations)
    ]


def realization_model(
    model: EnvironmentConfig,
    L: int,
    seed: int,
    point: int,
    realization: int,
) -> EnvironmentConfig:
    """Model record with the disorder of one realization drawn, if the model has any."""
    if isinstance(model, HeisenbergConfig) and model.fields_z is None:
        return model.with_fields(L, derive_rng(seed, DISORDER_STREAM, point, realization))
    return model


def realization_probe(cfg: RunConfig, point: int, realization: int) -> ProbeConfig:
    """Configured probe, or a probe with random Bloch angles when ``random_probe`` is set."""
    if not cfg.random_probe:
        return cfg.probe
    rng = derive_rng(cfg.seed, PROBE_STREAM, point, realization)
    theta = float(rng.uniform(0.0, math.pi))
    phi = float(rng.uniform(0.0, 2 * math.pi))
    return cfg.probe.model_copy(update={"theta": theta, "phi": phi})


@lru_cache(maxsize=4)
def eigensystems(model: EnvironmentConfig, L: int, g: float) -> PerturbedEigensystems:
    """Perturbed eigensystems, cached per process across realizations of a point."""
    reg = SpinRegister(L)
    return perturbed_eigensystems(build_environment(model, reg), build_coupling(g, reg))


def sampled_realization(task: RealizationTask, grid: TimeGrid) -> DecoherenceTrace:
    """Decoherence factor of one realization."""
    cfg = task.cfg
    model = realization_model(task.model, cfg.L, cfg.seed, task.point, task.realization)
    pe = eigensystems(model, cfg.L, cfg.probe.coupling)
    rng = derive_rng(cfg.seed, DYNAMICS_STREAM, task.point, task.realization)
    state = random_product_state(SpinRegister(cfg.L), rng)
    return sampled_trace(pe, state, grid, seed=cfg.seed)


def effective_trace(
    task: PointTask,
    grid: TimeGrid,
    realizations: int | None = None,
) -> DecoherenceTrace:
    """
    Effective decoherence factor at one sweep point.

    Disordered models average the effective factor over ``realizations`` field
    sets, drawn from the same streams as the sampled realizations.
    """
    cfg = task.cfg
    g = cfg.probe.coupling
    if not cfg.has_disorder:
        return effective_decoherence_factor(eigensystems(task.model, cfg.L, g), grid)

    count = cfg.realizations if realizations is None else realizations
    total: NDArray[np.complex128] = np.zeros(grid.size, dtype=np.complex128)
    for m in range(count):
        model = realization_model(task.model, cfg.L, cfg.seed, task.point, m)
        total += effective_values(eigensystems(model, cfg.L, g), grid.times)
    values = total / count
    values[0] = 1.0
    return DecoherenceTrace(grid=grid, values=values, kind="effective", realizations=count)
