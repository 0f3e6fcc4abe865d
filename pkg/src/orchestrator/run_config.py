"""Validated parameter bundles for the command-line subcommands."""

import math
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import AliasChoices, BaseModel, ConfigDict, Field, field_validator, model_validator

from src.config import get_settings

MAX_ED_SITES = 16


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class CommonConfig(BaseModel):
    """Options shared by every subcommand."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    out: Optional[Path] = Field(None, description="Output file; stdout when omitted")
    format: OutputFormat = Field(OutputFormat.CSV, description="Output format")
    seed: int = Field(
        default_factory=lambda: get_settings().seed,
        ge=0,
        description="Seed for eigensolver start vectors",
    )
    tol: float = Field(
        default_factory=lambda: get_settings().eigensolver_tol,
        gt=0.0,
        description="Numerical tolerance",
    )
    jobs: int = Field(default_factory=lambda: get_settings().jobs, ge=1)

    @field_validator("out")
    @classmethod
    def validate_out(cls, v: Optional[Path]) -> Optional[Path]:
        """The output directory must already exist."""
        if v is not None and not v.parent.is_dir():
            raise ValueError(f"output directory {v.parent} does not exist")
        return v

    def echo(self) -> Dict[str, Any]:
        """Effective configuration as written into every output."""
        return self.model_dump(mode="json")


class ToyConfig(CommonConfig):
    theta_steps: int = Field(11, ge=1, description="Points of the theta grid on [0, pi]")
    adiabatic: bool = Field(False, description="Add numeric adiabatic phases")
    ratio: float = Field(0.01, gt=0.0, description="Drive ratio omega0 / kB")
    adiabatic_steps: int = Field(
        default_factory=lambda: get_settings().adiabatic_steps,
        ge=100,
        description="Time steps per period",
    )
    field_scale: float = Field(1.0, gt=0.0, description="Field energy kB")

    def thetas(self) -> List[float]:
        return [float(t) for t in np.linspace(0.0, math.pi, self.theta_steps)]


class IsingConfig(CommonConfig):
    lambda_min: float = Field(0.0, ge=0.0)
    lambda_max: float = Field(2.0, ge=0.0)
    lambda_steps: int = Field(21, ge=1)
    modes: int = Field(1001, ge=3, description="Odd chain length of the mode sum")
    gamma: float = Field(1.0, ge=0.0, le=1.0, description="XY anisotropy")
    ed: bool = Field(False, description="Add exact-diagonalization Wootters columns")
    n: int = Field(12, ge=3, le=MAX_ED_SITES, description="Ring length for --ed")

    @field_validator("modes")
    @classmethod
    def validate_modes(cls, v: int) -> int:
        if v % 2 == 0:
            raise ValueError(f"mode sums need an odd N, got {v}")
        return v

    @model_validator(mode="after")
    def validate_range(self) -> "IsingConfig":
        if self.lambda_max < self.lambda_min:
            raise ValueError("lambda_max must not be below lambda_min")
        return self

    def lambdas(self) -> List[float]:
        return [float(x) for x in np.linspace(self.lambda_min, self.lambda_max, self.lambda_steps)]


class AfmConfig(CommonConfig):
    n: List[int] = Field(default_factory=lambda: [4, 6, 8, 10, 12])

    @field_validator("n")
    @classmethod
    def validate_sizes(cls, v: List[int]) -> List[int]:
        if not v:
            raise ValueError("at least one ring length is required")
        bad = [n for n in v if n % 2 or not 2 <= n <= MAX_ED_SITES]
        if bad:
            raise ValueError(f"ring lengths must be even and in [2, {MAX_ED_SITES}], got {bad}")
        return v


class BerryLoopConfig(CommonConfig):
    n: int = Field(5, ge=3, le=MAX_ED_SITES)
    lam: float = Field(0.5, ge=0.0, validation_alias=AliasChoices("lam", "lambda"))
    steps: int = Field(512, ge=8)
    gamma: float = Field(1.0, ge=0.0, le=1.0)

    @field_validator("n")
    @classmethod
    def validate_odd(cls, v: int) -> int:
        if v % 2 == 0:
            raise ValueError(f"the loop is compared with an odd-N mode sum; got N={v}")
        return v
