"""Heisenberg antiferromagnetic chain."""

from .heisenberg import (
    EXACT_ENERGY_PER_SITE,
    AfmReport,
    AfmSource,
    CorrelatorComponent,
    afm_spec,
    correlation_to_phase,
    correlator,
    ed_afm_report,
    exact_afm_report,
    isotropic_concurrence,
)

__all__ = [
    "EXACT_ENERGY_PER_SITE",
    "AfmReport",
    "AfmSource",
    "CorrelatorComponent",
    "afm_spec",
    "correlation_to_phase",
    "correlator",
    "ed_afm_report",
    "exact_afm_report",
    "isotropic_concurrence",
]
