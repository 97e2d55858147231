"""Effective decoherence factor and Haar-averaged Loschmidt echo per sweep value."""

import numpy as np
from numpy.typing import NDArray

from chaos_probe.cli.schemas import RunConfig
from chaos_probe.dephasing import effective_decoherence_factor, haar_averaged_le
from chaos_probe.services.results import ResultsDAO
from chaos_probe.tasks.pool import run_tasks
from chaos_probe.tasks.realizations import (
    PointTask,
    eigensystems,
    point_tasks,
    realization_model,
    time_grid,
)

LE_HEADER = ("param", "t", "abs_r_effective", "loschmidt_haar")


def le_point(task: PointTask) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """|r_e(t)| and the Haar-averaged echo at one sweep value.

    Disordered models are evaluated on the field set of realization 0.

    Args:
        task: The sweep point to evaluate.

    Returns:
        Both curves on the run grid.
    """
    cfg = task.cfg
    grid = time_grid(cfg)
    model = realization_model(task.model, cfg.L, cfg.seed, task.point, 0)
    pe = eigensystems(model, cfg.L, cfg.probe.coupling)
    return effective_decoherence_factor(pe, grid).magnitude, haar_averaged_le(pe, grid)


def run_le(cfg: RunConfig, dao: ResultsDAO, workers: int) -> None:
    """Write le.csv, one row per sweep value and grid time.

    Args:
        cfg: The run configuration.
        dao: Writer for the result files.
        workers: Size of the worker pool.
    """
    times = time_grid(cfg).times
    values = [value for value, _ in cfg.points()]
    curves = run_tasks(le_point, point_tasks(cfg), workers)
    dao.write_csv(
        "le.csv",
        LE_HEADER,
        (
            (values[point], t, magnitude[i], echo[i])
            for point, (magnitude, echo) in enumerate(curves)
            for i, t in enumerate(times)
        ),
    )
