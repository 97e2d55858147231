"""Time series of the decoherence factor and the probe phase at one parameter point."""

import numpy as np
from numpy.typing import NDArray

from chaos_probe.cli.schemas import RunConfig
from chaos_probe.dephasing import period_means
from chaos_probe.geomphase import (
    accumulated_phase,
    phase_per_period,
    probe_trajectory,
    unitary_phase_curve,
)
from chaos_probe.logging import logger
from chaos_probe.services.results import ResultsDAO
from chaos_probe.tasks.pool import run_tasks
from chaos_probe.tasks.realizations import (
    RealizationTask,
    effective_trace,
    point_tasks,
    realization_probe,
    realization_tasks,
    sampled_realization,
    time_grid,
)

TRACE_HEADER = ("t", "re_r", "im_r", "abs_r", "lambda_plus", "phi", "abs_delta")
PERIODS_HEADER = (
    "period",
    "phi",
    "abs_delta_mean",
    "abs_delta_stderr",
    "abs_delta_effective",
    "mean_abs_r_window",
    "mean_abs_r_cumulative",
)


def realization_period_deltas(task: RealizationTask) -> NDArray[np.float64]:
    """|delta Phi(N)| after every period for one realization.

    Args:
        task: The realization to evaluate.

    Returns:
        One value per period.
    """
    trace = sampled_realization(task, time_grid(task.cfg))
    probe = realization_probe(task.cfg, task.point, task.realization)
    return phase_per_period(probe, trace)[1]


def mean_and_stderr(
    samples: NDArray[np.float64],
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Mean over the first axis and its standard error (zero for a single sample)."""
    mean = samples.mean(axis=0)
    if samples.shape[0] < 2:
        return mean, np.zeros_like(mean)
    return mean, samples.std(axis=0, ddof=1) / np.sqrt(samples.shape[0])


def run_trace(cfg: RunConfig, dao: ResultsDAO, workers: int) -> None:
    """Write trace.csv and periods.csv for the configured point.

    Args:
        cfg: The run configuration.
        dao: Writer for the result files.
        workers: Size of the worker pool.
    """
    grid = time_grid(cfg)
    effective = effective_trace(point_tasks(cfg)[0], grid)
    trajectory = probe_trajectory(cfg.probe, effective)
    phi = accumulated_phase(trajectory)
    reference = unitary_phase_curve(cfg.probe.theta, cfg.probe.omega, grid.times)
    with np.errstate(divide="ignore", invalid="ignore"):
        abs_delta = np.where(reference != 0, np.abs(1 - phi / reference), np.nan)
    # no phase is accumulated at t = 0
    abs_delta[0] = 0.0

    dao.write_csv(
        "trace.csv",
        TRACE_HEADER,
        (
            (grid.times[i], r.real, r.imag, abs(r), trajectory.lambda_plus[i], phi[i], abs_delta[i])
            for i, r in enumerate(effective.values)
        ),
    )

    logger.info(f"Tracing {cfg.realizations} realizations over {grid.periods} periods")
    deltas = np.array(run_tasks(realization_period_deltas, realization_tasks(cfg), workers))
    mean, stderr = mean_and_stderr(deltas)
    phi_periods, delta_effective = phase_per_period(cfg.probe, effective)
    window = period_means(effective)
    cumulative = period_means(effective, cumulative=True)

    dao.write_csv(
        "periods.csv",
        PERIODS_HEADER,
        (
            (
                p + 1,
                phi_periods[p],
                mean[p],
                stderr[p],
                delta_effective[p],
                window[p],
                cumulative[p],
            )
            for p in range(grid.periods)
        ),
    )
