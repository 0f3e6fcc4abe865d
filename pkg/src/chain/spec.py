"""Chain descriptors and computational-basis state vectors."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.exceptions import ConfigurationError

MAX_SITES = 20


class ModelKind(str, Enum):
    """Supported chain Hamiltonians."""

    TRANSVERSE_XY = "transverse_xy"
    HEISENBERG_AFM = "heisenberg_afm"


class Boundary(str, Enum):
    """Boundary condition of the chain."""

    OPEN = "open"
    PERIODIC = "periodic"


class ChainSpec(BaseModel):
    """
    Model descriptor for a spin-1/2 chain.

    ``lam`` multiplies only the coupling terms of the XY chain; the transverse field
    has unit strength. ``gamma`` and ``lam`` are ignored for the Heisenberg chain.
    """

    model_config = ConfigDict(frozen=True)

    model: ModelKind = Field(default=ModelKind.TRANSVERSE_XY, description="Hamiltonian kind")
    n_sites: int = Field(..., ge=1, le=MAX_SITES, description="Number of sites N")
    boundary: Boundary = Field(default=Boundary.PERIODIC, description="Boundary condition")
    gamma: float = Field(default=1.0, ge=0.0, le=1.0, description="XY anisotropy")
    lam: float = Field(default=0.0, ge=0.0, description="Inverse field strength")
    phi: float = Field(default=0.0, ge=0.0, le=math.pi, description="Rotation angle about z")

    @model_validator(mode="after")
    def check_boundary(self) -> "ChainSpec":
        """Reject periodic rings that would double-count a bond."""
        if self.boundary is Boundary.PERIODIC and self.n_sites < 3:
            raise ValueError(
                f"periodic boundary needs n_sites >= 3, got {self.n_sites} "
                "(use an open chain for a single bond)"
            )
        return self

    @property
    def dim(self) -> int:
        """Dimension 2^N of the computational basis."""
        return 1 << self.n_sites

    def bonds(self) -> List[Tuple[int, int]]:
        """Nearest-neighbour bonds (i, j) of the chain."""
        pairs = [(i, i + 1) for i in range(self.n_sites - 1)]
        if self.boundary is Boundary.PERIODIC:
            pairs.append((self.n_sites - 1, 0))
        return pairs

    def replace(self, **changes: Any) -> "ChainSpec":
        """Return a validated copy with some fields changed."""
        return ChainSpec.model_validate({**self.model_dump(), **changes})


@dataclass(frozen=True, eq=False)
class StateVector:
    """
    Amplitudes over the 2^N computational basis.

    Bit i of a basis index is site i; bit value 0 is spin up (sigma^z = +1).
    """

    amplitudes: np.ndarray
    n_sites: int

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1 or amps.shape[0] != 1 << self.n_sites:
            raise ConfigurationError(
                f"state of length {amps.shape} does not match 2^{self.n_sites} amplitudes"
            )
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, n_sites: int, index: int) -> "StateVector":
        """Computational basis state |index>."""
        amps = np.zeros(1 << n_sites, dtype=np.complex128)
        amps[index] = 1.0
        return cls(amps, n_sites)

    @classmethod
    def random(cls, n_sites: int, seed: int = 0) -> "StateVector":
        """Normalized random state from a counter-based generator."""
        rng = np.random.Generator(np.random.Philox(seed))
        dim = 1 << n_sites
        amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        return cls(amps, n_sites).normalized()

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "StateVector":
        norm = self.norm()
        if norm == 0.0:
            raise ConfigurationError("cannot normalize the zero vector")
        return StateVector(self.amplitudes / norm, self.n_sites)

    def overlap(self, other: "StateVector") -> complex:
        """<self|other>."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))
