"""Level statistics along the sweep grid (eta-sweep experiment)."""

from dataclasses import dataclass

import numpy as np

from chaos_probe.cli.schemas import RunConfig, SectorSpec
from chaos_probe.logging import logger
from chaos_probe.operators import EnvironmentConfig, Operator, SpinRegister, build_environment
from chaos_probe.services.results import ResultsDAO
from chaos_probe.spectral import (
    SymmetrySector,
    central_levels,
    diagonalize,
    magnetization_parity_sector,
    magnetization_sector,
    parity_sector,
    restrict,
    spectrum_statistics,
)
from chaos_probe.spectral.sectors import Parity
from chaos_probe.tasks.pool import run_tasks
from chaos_probe.tasks.realizations import realization_model

ETA_HEADER = ("param", "eta", "eta_stderr", "mean_ratio", "sector_dim", "eta_flag")


@dataclass(frozen=True)
class SpectralTask:
    cfg: RunConfig
    point: int
    value: float | None
    model: EnvironmentConfig
    realization: int


@dataclass(frozen=True)
class EtaRow:
    """Disorder-averaged chaos indicator at one sweep value."""

    param: float | None
    eta: float
    eta_stderr: float
    mean_ratio: float
    sector_dim: int

    @property
    def flag(self) -> str:
        return "" if 0.0 <= self.eta <= 1.0 else "out_of_range"


def select_sector(reg: SpinRegister, spec: SectorSpec) -> SymmetrySector | None:
    """Sector described by a run config, None for the full space.

    Args:
        reg: The spin register of the spectral run.
        spec: The sector section of the run config.

    Returns:
        The requested sector.
    """
    parity: Parity = "even" if spec.parity == "even" else "odd"
    if spec.kind == "parity":
        return parity_sector(reg, parity)
    if spec.kind == "magnetization":
        assert spec.n is not None  # noqa: S101
        if spec.parity is None:
            return magnetization_sector(reg, spec.n)
        return magnetization_parity_sector(reg, spec.n, parity)
    return None


def spectral_point(task: SpectralTask) -> tuple[float, float, int]:
    """Chaos indicator of one disorder realization at one sweep value.

    Args:
        task: The spectral task.

    Returns:
        Eta, mean spacing ratio and sector dimension.
    """
    spectral = task.cfg.spectral
    assert spectral is not None  # noqa: S101
    reg = SpinRegister(spectral.L)
    model = realization_model(task.model, spectral.L, task.cfg.seed, task.point, task.realization)
    H: Operator = build_environment(model, reg)
    sector = select_sector(reg, spectral.sector)
    if sector is not None:
        H = restrict(H, sector, tol=spectral.leakage_tol, parameter=task.value)
    levels = diagonalize(H, vectors=False).values
    if spectral.central_fraction < 1:
        levels = central_levels(levels, spectral.central_fraction)
    stats = spectrum_statistics(levels)
    return stats.eta, stats.mean_ratio, H.dim


def spectral_run(cfg: RunConfig, workers: int) -> list[EtaRow]:
    """Eta per sweep value, averaged over disorder realizations where the model has disorder.

    Args:
        cfg: The run configuration, with a spectral section.
        workers: Size of the worker pool.

    Returns:
        One row per sweep value.
    """
    if cfg.spectral is None:
        raise ValueError("spectral_run needs a spectral section")
    count = cfg.spectral.realizations if cfg.has_disorder else 1
    points = cfg.points()
    tasks = [
        SpectralTask(cfg, point, value, model, m)
        for point, (value, model) in enumerate(points)
        for m in range(count)
    ]
    logger.info(f"Spectral run: {len(points)} points x {count} realizations, L={cfg.spectral.L}")
    results = run_tasks(spectral_point, tasks, workers)

    rows = []
    for point, (value, _) in enumerate(points):
        chunk = results[point * count : (point + 1) * count]
        etas = np.array([eta for eta, _, _ in chunk])
        stderr = float(etas.std(ddof=1) / np.sqrt(count)) if count > 1 else 0.0
        row = EtaRow(
            param=value,
            eta=float(etas.mean()),
            eta_stderr=stderr,
            mean_ratio=float(np.mean([ratio for _, ratio, _ in chunk])),
            sector_dim=chunk[0][2],
        )
        if row.flag:
            logger.warning(f"eta={row.eta:.3f} outside [0, 1] at {value}")
        rows.append(row)
    return rows


def run_eta_sweep(cfg: RunConfig, dao: ResultsDAO, workers: int) -> None:
    """Write eta.csv.

    Args:
        cfg: The run configuration.
        dao: Writer for the result files.
        workers: Size of the worker pool.
    """
    rows = spectral_run(cfg, workers)
    dao.write_csv(
        "eta.csv",
        ETA_HEADER,
        (
            (row.param, row.eta, row.eta_stderr, row.mean_ratio, row.sector_dim, row.flag)
            for row in rows
        ),
    )
