"""Free-fermion solution of the transverse XY chain: mode angles and Berry phases."""

from .bogoliubov import (
    ModeAngles,
    analytic_mode_state,
    berry_phase_mode_sum,
    berry_phase_thermo,
    bogoliubov_angle,
    bogoliubov_angles,
    cos_theta,
    mode_angles,
)
from .quadrature import QuadratureResult, adaptive_simpson
from .reports import PhaseMethod, PhaseReport, concurrence_from_phase, concurrence_out_of_range

__all__ = [
    "ModeAngles",
    "PhaseMethod",
    "PhaseReport",
    "QuadratureResult",
    "adaptive_simpson",
    "analytic_mode_state",
    "berry_phase_mode_sum",
    "berry_phase_thermo",
    "bogoliubov_angle",
    "bogoliubov_angles",
    "concurrence_from_phase",
    "concurrence_out_of_range",
    "cos_theta",
    "mode_angles",
]
