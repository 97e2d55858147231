"""Geometric-phase correction and non-Markovianity along a parameter sweep."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from chaos_probe.cli.schemas import RunConfig
from chaos_probe.exceptions import DegenerateCurveError
from chaos_probe.geomphase import geometric_phase, normalize_curve
from chaos_probe.logging import logger
from chaos_probe.nonmarkov import blp_measure, dephasing_pair_trace, largest_revival_measure
from chaos_probe.services.results import ResultsDAO
from chaos_probe.tasks.pool import run_tasks
from chaos_probe.tasks.realizations import (
    PointTask,
    RealizationTask,
    effective_trace,
    point_tasks,
    realization_probe,
    realization_tasks,
    sampled_realization,
    time_grid,
)
from chaos_probe.tasks.spectral_process import spectral_run
from chaos_probe.tasks.trace_process import mean_and_stderr

SWEEP_HEADER = (
    "param",
    "mean_absdelta",
    "stderr",
    "absdelta_effective",
    "eta",
    "eta_flag",
    "nblp",
    "nlr",
    "norm_absdelta",
    "norm_eta",
    "norm_nblp",
    "norm_nlr",
)


@dataclass(frozen=True)
class EffectiveResult:
    abs_delta: float
    nblp: float
    nlr: float


def realization_delta(task: RealizationTask) -> float:
    """|delta Phi| over the whole run for one realization.

    Args:
        task: The realization to evaluate.

    Returns:
        The absolute phase correction.
    """
    trace = sampled_realization(task, time_grid(task.cfg))
    probe = realization_probe(task.cfg, task.point, task.realization)
    return abs(geometric_phase(probe, trace).delta)


def point_effective(task: PointTask) -> EffectiveResult:
    """Phase correction and non-Markovianity measures of the effective trace.

    Args:
        task: The sweep point to evaluate.

    Returns:
        |delta Phi|, N^BLP and N^LR of the effective decoherence factor.
    """
    trace = effective_trace(task, time_grid(task.cfg))
    pair = dephasing_pair_trace(trace, task.cfg.probe.omega)
    return EffectiveResult(
        abs_delta=abs(geometric_phase(task.cfg.probe, trace).delta),
        nblp=blp_measure(pair),
        nlr=largest_revival_measure(pair),
    )


def _normalized(name: str, values: NDArray[np.float64] | None) -> NDArray[np.float64] | None:
    if values is None:
        return None
    try:
        return normalize_curve(values, orientation="direct")
    except DegenerateCurveError:
        logger.warning(f"{name} is constant along the sweep, normalized column left empty")
        return None


def _cell(values: NDArray[np.float64] | None, i: int) -> float | None:
    return None if values is None else float(values[i])


def _sweep(cfg: RunConfig, dao: ResultsDAO, workers: int, with_nonmarkov: bool) -> None:
    values = [value for value, _ in cfg.points()]
    size = len(values)

    parameter = cfg.sweep.parameter if cfg.sweep else "point"
    logger.info(f"Sweeping {parameter} over {size} points")
    deltas = np.array(run_tasks(realization_delta, realization_tasks(cfg), workers))
    mean, stderr = mean_and_stderr(deltas.reshape(size, cfg.realizations).T)
    effective = run_tasks(point_effective, point_tasks(cfg), workers)

    eta = flags = None
    if cfg.spectral is not None:
        rows = spectral_run(cfg, workers)
        eta = np.array([row.eta for row in rows])
        flags = [row.flag for row in rows]
    nblp = np.array([result.nblp for result in effective]) if with_nonmarkov else None
    nlr = np.array([result.nlr for result in effective]) if with_nonmarkov else None

    norms = [
        _normalized("mean_absdelta", mean if size > 1 else None),
        _normalized("eta", eta if size > 1 else None),
        _normalized("nblp", nblp if size > 1 else None),
        _normalized("nlr", nlr if size > 1 else None),
    ]
    dao.write_csv(
        "sweep.csv",
        SWEEP_HEADER,
        (
            (
                values[i],
                mean[i],
                stderr[i],
                effective[i].abs_delta,
                _cell(eta, i),
                None if flags is None else flags[i],
                _cell(nblp, i),
                _cell(nlr, i),
                *(_cell(norm, i) for norm in norms),
            )
            for i in range(size)
        ),
    )


def run_phase_sweep(cfg: RunConfig, dao: ResultsDAO, workers: int) -> None:
    """Write sweep.csv with the realization-averaged |delta Phi| per sweep value.

    Args:
        cfg: The run configuration.
        dao: Writer for the result files.
        workers: Size of the worker pool.
    """
    _sweep(cfg, dao, workers, with_nonmarkov=False)


def run_nonmarkov(cfg: RunConfig, dao: ResultsDAO, workers: int) -> None:
    """Write sweep.csv with N^BLP and N^LR of the {|+x>, |-x>} pair filled in.

    Args:
        cfg: The run configuration.
        dao: Writer for the result files.
        workers: Size of the worker pool.
    """
    _sweep(cfg, dao, workers, with_nonmarkov=True)
