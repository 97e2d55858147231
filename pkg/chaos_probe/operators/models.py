"""Parameter records for the probe and the four environment chains."""

from __future__ import annotations

import math
from typing import Annotated, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# coupling g used when a run config leaves it out
DEFAULT_COUPLING = {
    "ising": 0.2,
    "heisenberg": 0.005,
    "xxz": 0.1,
    "longrange": 0.2,
}


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True, extra="forbid")


class ProbeConfig(_Record):
    """Two-level probe: frequency, coupling to site 1 and initial Bloch angles."""

    omega: float = Field(1.0, gt=0)
    g: float | None = None
    theta: float = 3 * math.pi / 7
    phi: float = 0.0

    @field_validator("theta")
    @classmethod
    def _theta_range(cls, value: float) -> float:
        if not 0 <= value < math.pi:
            raise ValueError("theta must lie in [0, pi)")
        return value

    @field_validator("phi")
    @classmethod
    def _phi_range(cls, value: float) -> float:
        if not 0 <= value < 2 * math.pi:
            raise ValueError("phi must lie in [0, 2pi)")
        return value

    @property
    def coupling(self) -> float:
        return 0.0 if self.g is None else self.g


class IsingConfig(_Record):
    """Ising chain in transverse and longitudinal fields."""

    kind: Literal["ising"] = "ising"
    hx: float = 1.0
    hz: float = 0.0
    J: float = 1.0


class HeisenbergConfig(_Record):
    """Heisenberg chain in a random z field drawn on [-h, h]."""

    kind: Literal["heisenberg"] = "heisenberg"
    h: float = Field(0.5, ge=0)
    fields_z: tuple[float, ...] | None = None

    @model_validator(mode="after")
    def _fields_within_disorder(self) -> HeisenbergConfig:
        if self.fields_z is not None:
            bound = self.h * (1 + 1e-12)
            if any(abs(value) > bound for value in self.fields_z):
                raise ValueError("every field in fields_z must lie in [-h, h]")
        return self

    def with_fields(self, L: int, rng: np.random.Generator) -> HeisenbergConfig:
        """
        Draw one disorder realization.

        :param L: chain length.
        :param rng: seeded generator.
        :returns: copy of the config holding the drawn fields.
        """
        drawn = rng.uniform(-self.h, self.h, size=L)
        return self.model_copy(update={"fields_z": tuple(float(x) for x in drawn)})


class XXZConfig(_Record):
    """Anisotropic XXZ chain with a next-nearest-neighbour perturbation."""

    kind: Literal["xxz"] = "xxz"
    mu: float = 0.5
    lam: float = Field(0.0, alias="lambda")


class LongRangeConfig(_Record):
    """Ising chain with power-law xx couplings and a graded z field."""

    kind: Literal["longrange"] = "longrange"
    J0: float = 1.0
    gamma: float = Field(1.3, gt=0)
    Bz0: float = 5.0
    ge: float = 0.0

    def coupling_between(self, first: int, second: int) -> float:
        return self.J0 / abs(first - second) ** self.gamma


EnvironmentConfig = Annotated[
    Union[IsingConfig, HeisenbergConfig, XXZConfig, LongRangeConfig],
    Field(discriminator="kind"),
]


def sweepable_parameters(model: type[BaseModel]) -> dict[str, str]:
    """
    Public names of the scalar parameters a sweep may vary.

    :param model: environment config class.
    :returns: mapping public name (alias if any) -> attribute name.
    """
    names = {}
    for name, info in model.model_fields.items():
        if name in {"kind", "fields_z"}:
            continue
        names[info.alias or name] = name
    return names


def with_parameter(config: BaseModel, parameter: str, value: float) -> BaseModel:
    """
    Copy of a config with one sweepable parameter replaced.

    The copy goes through validation again.
    """
    attribute = sweepable_parameters(type(config))[parameter]
    data = config.model_dump()
    data[attribute] = value
    return type(config).model_validate(data)
