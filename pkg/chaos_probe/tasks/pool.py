"""Bounded worker pool for independent experiment tasks."""

from collections.abc import Callable, Sequence
from multiprocessing import Pool
from typing import TypeVar

import psutil

from chaos_probe.logging import logger
from chaos_probe.settings import settings

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: int | None = None) -> int:
    """Worker count from the argument, then the settings, then the physical cores.

    Args:
        workers: Explicit worker count, if any.

    Returns:
        A positive worker count.
    """
    for candidate in (workers, settings.workers_count):
        if candidate is not None:
            if candidate < 1:
                raise ValueError(f"worker count must be positive, got {candidate}")
            return candidate
    return psutil.cpu_count(logical=False) or 1


def run_tasks(func: Callable[[T], R], tasks: Sequence[T], workers: int) -> list[R]:
    """Run tasks and return their results in task order.

    Args:
        func: Module-level function applied to every task.
        tasks: Task descriptions, picklable.
        workers: Number of processes.

    Returns:
        One result per task, in the order of ``tasks``.
    """
    if workers == 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]

    processes = min(workers, len(tasks))
    chunksize = max(1, len(tasks) // (4 * processes))
    logger.debug(f"Running {len(tasks)} tasks on {processes} processes")
    try:
        with Pool(processes=processes) as pool:
            return list(pool.imap(func, tasks, chunksize=chunksize))
    except Exception as e:
        logger.error(f"A worker task failed: {e!s}")
        raise
