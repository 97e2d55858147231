from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numpy.typing import NDArray


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid over N probe periods, both endpoints included."""

    omega: float
    periods: int
    steps_per_period: int = 200

    def __post_init__(self) -> None:
        if self.omega <= 0:
            raise ValueError("omega must be positive")
        if self.periods < 1 or self.steps_per_period < 1:
            raise ValueError("periods and steps_per_period must be at least 1")

    @classmethod
    def spanning(cls, omega: float, t_max: float, steps_per_period: int = 200) -> TimeGrid:
        """Smallest whole-period grid reaching ``t_max``."""
        periods = max(1, math.ceil(t_max * omega / (2 * math.pi) - 1e-12))
        return cls(omega=omega, periods=periods, steps_per_period=steps_per_period)

    @property
    def tau(self) -> float:
        return 2 * math.pi * self.periods / self.omega

    @property
    def dt(self) -> float:
        return 2 * math.pi / (self.omega * self.steps_per_period)

    @property
    def size(self) -> int:
        return self.periods * self.steps_per_period + 1

    @cached_property
    def times(self) -> NDArray[np.float64]:
        times = np.linspace(0.0, self.tau, self.size)
        times.flags.writeable = False
        return times

    def period_end(self, period: int) -> int:
        """Grid index of t = 2 pi period / omega."""
        return period * self.steps_per_period
