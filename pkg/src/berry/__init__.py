"""Numerical Berry phases from discretized loops of states."""

from .ed_loop import ed_berry_phase
from .wilson_loop import (
    LoopPhase,
    StateLoop,
    canonical_reference,
    mode_berry_phase,
    mode_loop,
    spin_cone_loop,
    wilson_loop,
    wilson_loop_phase,
)

__all__ = [
    "LoopPhase",
    "StateLoop",
    "canonical_reference",
    "ed_berry_phase",
    "mode_berry_phase",
    "mode_loop",
    "spin_cone_loop",
    "wilson_loop",
    "wilson_loop_phase",
]
