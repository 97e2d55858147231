import math
from collections.abc import Callable
from pathlib import Path
from typing import Any

import numpy as np
import pytest
import ujson

from chaos_probe.dephasing import TimeGrid
from chaos_probe.operators import (
    IsingConfig,
    Operator,
    SpinRegister,
    build_coupling,
    build_environment,
)


@pytest.fixture
def rng() -> np.random.Generator:
    """
    Seeded generator for test data.

    :return: numpy generator.
    """
    return np.random.default_rng(20240611)


@pytest.fixture
def small_grid() -> TimeGrid:
    """
    Coarse grid of two probe periods.

    :return: time grid.
    """
    return TimeGrid(omega=1.0, periods=2, steps_per_period=50)


@pytest.fixture
def ising_pair() -> tuple[Operator, Operator]:
    """
    Non-integrable L=4 Ising chain and its probe coupling.

    :return: environment Hamiltonian and coupling operator.
    """
    reg = SpinRegister(4)
    env = build_environment(IsingConfig(hx=1.0, hz=0.5, J=1.0), reg)
    return env, build_coupling(0.2, reg)


@pytest.fixture
def write_config(tmp_path: Path) -> Callable[..., Path]:
    """
    Writes a run config JSON into a temporary directory.

    :param tmp_path: pytest temporary directory.
    :return: factory taking the config mapping and an optional file name.
    """

    def _write(config: dict[str, Any], name: str = "config.json") -> Path:
        path = tmp_path / name
        path.write_text(ujson.dumps(config), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def trace_config() -> dict[str, Any]:
    """
    Small, fast trace experiment.

    :return: raw run config.
    """
    return {
        "experiment": "trace",
        "model": {"kind": "ising", "hx": 1.0, "hz": 0.5, "J": 1.0},
        "probe": {"omega": 1.0, "g": 0.2, "theta": 3 * math.pi / 7},
        "L": 3,
        "periods": 2,
        "steps_per_period": 40,
        "realizations": 3,
        "seed": 7,
    }
