"""Two-spin model in a rotating field."""

from .adiabatic import AdiabaticResult, adiabatic_geometric_phase, period_propagator
from .two_spin import (
    ToyParams,
    amplitude_profile,
    analytic_berry_phases,
    concurrence_theta,
    instantaneous_eigenstates,
    mu_factors,
    n_vector,
    wilson_berry_phases,
    window_phase,
)

__all__ = [
    "AdiabaticResult",
    "ToyParams",
    "adiabatic_geometric_phase",
    "amplitude_profile",
    "analytic_berry_phases",
    "concurrence_theta",
    "instantaneous_eigenstates",
    "mu_factors",
    "n_vector",
    "period_propagator",
    "wilson_berry_phases",
    "window_phase",
]
