"""Command-line entry points: ``run`` and ``validate``."""

from __future__ import annotations

import argparse
import time
from collections.abc import Sequence
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from chaos_probe.cli.schemas import RunConfig
from chaos_probe.exceptions import CapacityError, ChaosProbeError, ConfigValidationError
from chaos_probe.logging import logger
from chaos_probe.operators import SpinRegister
from chaos_probe.services.results import ResultsDAO
from chaos_probe.settings import settings
from chaos_probe.tasks import EXPERIMENTS, resolve_workers

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


def package_version() -> str:
    try:
        return version("chaos-probe")
    except PackageNotFoundError:
        return "unknown"


def load_run_config(path: str | Path, seed: int | None = None) -> RunConfig:
    """
    Parse a run config or a manifest into a validated RunConfig.

    :param path: JSON config or manifest.
    :param seed: seed overriding the file's one.
    :returns: validated config.
    """
    raw = ResultsDAO.load_config(path)
    if seed is not None:
        raw["seed"] = seed
    return RunConfig.model_validate(raw)


def check_capacity(cfg: RunConfig) -> None:
    """Raise CapacityError if a chain of the run exceeds the memory guard."""
    SpinRegister(cfg.L)
    if cfg.spectral is not None:
        SpinRegister(cfg.spectral.L)


def run_experiment(
    cfg: RunConfig,
    out_dir: str | Path | None = None,
    workers: int | None = None,
) -> Path:
    """
    Execute one experiment and write its tables and manifest.

    :param cfg: validated run config.
    :param out_dir: output directory, ``settings.output_dir`` when omitted.
    :param workers: worker pool size.
    :returns: path of the manifest.
    """
    check_capacity(cfg)
    pool_size = resolve_workers(workers)
    dao = ResultsDAO(out_dir if out_dir is not None else settings.output_dir)
    logger.info(f"Running {cfg.experiment} ({cfg.model.kind}, L={cfg.L}) on {pool_size} workers")

    start = time.perf_counter()
    EXPERIMENTS[cfg.experiment](cfg, dao, pool_size)
    wall_time = time.perf_counter() - start

    return dao.write_manifest(
        {
            "experiment": cfg.experiment,
            "config": cfg.model_dump(mode="json", by_alias=True),
            "seed": cfg.seed,
            "version": package_version(),
            "wall_time_s": round(wall_time, 3),
            "workers": pool_size,
        },
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaos-probe",
        description="Dephasing-probe diagnostics of quantum chaos in spin chains.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run an experiment from a config or manifest")
    run.add_argument("config", type=Path)
    run.add_argument("--out", type=Path, default=None, help="output directory")
    run.add_argument("--workers", type=int, default=None, help="worker processes")
    run.add_argument("--seed", type=int, default=None, help="override the config seed")

    check = commands.add_parser("validate", help="validate a config without running it")
    check.add_argument("config", type=Path)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Parse arguments, dispatch the command and map failures to exit codes.

    :param argv: arguments without the program name.
    :returns: 0 on success, 2 on invalid input, 3 on numerical failure.
    """
    args = build_parser().parse_args(argv)
    try:
        cfg = load_run_config(args.config, getattr(args, "seed", None))
        if args.command == "validate":
            check_capacity(cfg)
            logger.info(f"{args.config} is a valid {cfg.experiment} config")
        else:
            manifest = run_experiment(cfg, args.out, args.workers)
            logger.info(f"Done, manifest at {manifest}")
    except (ConfigValidationError, ValidationError, CapacityError) as e:
        logger.error(f"Invalid run config: {e!s}")
        return EXIT_INVALID
    except (ChaosProbeError, np.linalg.LinAlgError) as e:
        logger.error(f"Numerical failure: {e!s}")
        return EXIT_NUMERICAL
    except (OSError, ValueError) as e:
        logger.error(f"Cannot use {args.config}: {e!s}")
        return EXIT_INVALID
    return EXIT_OK
