"""Berry-phase results and the phase-to-concurrence relation."""

import math
from enum import Enum
from typing import Any, Dict

from pydantic import BaseModel, Field


class PhaseMethod(str, Enum):
    """How a Berry phase was obtained."""

    MODE_SUM = "ModeSum"
    QUADRATURE = "Quadrature"
    WILSON_LOOP = "WilsonLoop"
    ADIABATIC = "Adiabatic"


def concurrence_from_phase(gamma: float) -> float:
    """|gamma| / 2pi; values above 1 are returned as is and flagged by the caller."""
    return abs(gamma) / (2.0 * math.pi)


def concurrence_out_of_range(concurrence: float) -> bool:
    return not 0.0 <= concurrence <= 1.0


class PhaseReport(BaseModel):
    """Berry phase with its provenance and the concurrence it implies."""

    gamma: float = Field(..., description="Berry phase in radians")
    method: PhaseMethod
    concurrence: float = Field(..., ge=0.0, description="|gamma| / 2pi, never clipped")
    out_of_range: bool = Field(False, description="Set when the concurrence exceeds 1")
    metadata: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_gamma(cls, gamma: float, method: PhaseMethod, **metadata: Any) -> "PhaseReport":
        concurrence = concurrence_from_phase(gamma)
        return cls(
            gamma=gamma,
            method=method,
            concurrence=concurrence,
            out_of_range=concurrence_out_of_range(concurrence),
            metadata=metadata,
        )
