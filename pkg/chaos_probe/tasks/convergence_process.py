"""Distance between the R-averaged and the effective decoherence factor."""

from dataclasses import dataclass

import numpy as np

from chaos_probe.cli.schemas import RunConfig
from chaos_probe.dephasing import TimeGrid, averaged_trace, effective_decoherence_factor
from chaos_probe.operators import EnvironmentConfig
from chaos_probe.services.results import ResultsDAO
from chaos_probe.tasks.pool import run_tasks
from chaos_probe.tasks.realizations import eigensystems, point_tasks, realization_model

CONVERGENCE_HEADER = ("param", "realizations", "rms_distance", "sup_distance")


@dataclass(frozen=True)
class ConvergenceTask:
    cfg: RunConfig
    point: int
    model: EnvironmentConfig
    realizations: int


def convergence_grid(cfg: RunConfig) -> TimeGrid:
    """Grid over ``t_max`` when configured, else over the configured periods."""
    if cfg.t_max is not None:
        return TimeGrid.spanning(cfg.probe.omega, cfg.t_max, cfg.steps_per_period)
    return TimeGrid(cfg.probe.omega, cfg.periods, cfg.steps_per_period)


def convergence_point(task: ConvergenceTask) -> tuple[float, float]:
    """RMS and sup distance between the averaged and the effective factor.

    Disordered models are evaluated on the field set of realization 0.

    Args:
        task: The sweep point and realization count.

    Returns:
        RMS distance and sup distance over the grid.
    """
    cfg = task.cfg
    grid = convergence_grid(cfg)
    model = realization_model(task.model, cfg.L, cfg.seed, task.point, 0)
    pe = eigensystems(model, cfg.L, cfg.probe.coupling)
    averaged = averaged_trace(pe, task.realizations, grid, cfg.seed, point=task.point)
    gap = np.abs(averaged.values - effective_decoherence_factor(pe, grid).values)
    if cfg.t_max is not None:
        gap = gap[grid.times <= cfg.t_max * (1 + 1e-12)]
    return float(np.sqrt(np.mean(gap**2))), float(gap.max())


def run_convergence(cfg: RunConfig, dao: ResultsDAO, workers: int) -> None:
    """Write convergence.csv, one row per sweep value and realization count.

    Args:
        cfg: The run configuration.
        dao: Writer for the result files.
        workers: Size of the worker pool.
    """
    values = [value for value, _ in cfg.points()]
    tasks = [
        ConvergenceTask(cfg, point.point, point.model, count)
        for point in point_tasks(cfg)
        for count in cfg.convergence_realizations
    ]
    distances = run_tasks(convergence_point, tasks, workers)
    dao.write_csv(
        "convergence.csv",
        CONVERGENCE_HEADER,
        (
            (values[task.point], task.realizations, rms, sup)
            for task, (rms, sup) in zip(tasks, distances)
        ),
    )
