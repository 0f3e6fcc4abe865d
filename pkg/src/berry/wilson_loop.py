"""Discrete (Wilson-loop) Berry phases of closed loops of states."""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from loguru import logger

from src.exceptions import ConfigurationError, LoopResolutionError
from src.fermions.bogoliubov import analytic_mode_state

MIN_STEPS = 8
NORM_TOL = 1e-10
DEFAULT_MIN_OVERLAP = 0.1
# Below this magnitude a component cannot fix the gauge of a state
GAUGE_FLOOR = 1e-12
# A default reference must keep at least this fraction of the best component floor
REFERENCE_FRACTION = 1e-3


@dataclass(frozen=True, eq=False)
class StateLoop:
    """
    States psi_0 .. psi_steps along a closed path; the last segment closes onto psi_0.

    Attributes:
        states: Array of shape (steps + 1, dim), each row of unit norm
    """

    states: np.ndarray

    def __post_init__(self) -> None:
        states = np.asarray(self.states, dtype=np.complex128)
        if states.ndim != 2:
            raise ConfigurationError(f"loop states must form a 2-D array, got shape {states.shape}")
        if states.shape[0] - 1 < MIN_STEPS:
            raise ConfigurationError(
                f"a loop needs at least {MIN_STEPS} steps, got {states.shape[0] - 1}"
            )
        norms = np.linalg.norm(states, axis=1)
        worst = float(np.max(np.abs(norms - 1.0)))
        if worst > NORM_TOL:
            raise ConfigurationError(f"loop states must be unit norm (deviation {worst:.3e})")
        object.__setattr__(self, "states", states)

    @property
    def steps(self) -> int:
        return self.states.shape[0] - 1

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    def reversed(self) -> "StateLoop":
        return StateLoop(self.states[::-1].copy())


@dataclass
class LoopPhase:
    """Wilson-loop phase with the gauge reference that produced it."""

    phase: float
    reference: Optional[int]
    min_overlap: float


def canonical_reference(states: np.ndarray) -> Optional[int]:
    """
    Lowest basis index that stays bounded away from zero along the loop.

    A component qualifies when its smallest magnitude is at least REFERENCE_FRACTION
    of the best such floor. The winding count of the accumulated phase is measured
    against this component, so a fixed low index keeps the 2 pi branch stable as
    the loop deforms (|up> for a spin cone, the all-up state for a chain).

    Returns:
        Basis index, or None if every component vanishes somewhere on the loop
    """
    floor = np.min(np.abs(states), axis=0)
    best = float(np.max(floor))
    if best <= GAUGE_FLOOR:
        return None
    return int(np.argmax(floor >= max(REFERENCE_FRACTION * best, GAUGE_FLOOR)))


def wilson_loop(
    loop: StateLoop,
    min_overlap: float = DEFAULT_MIN_OVERLAP,
    reference: Optional[int] = None,
) -> LoopPhase:
    """
    Accumulate -sum_j Arg<psi_j|psi_j+1> around the loop.

    Every state is first rotated so that the reference component is real and
    positive; the result then depends only on the rays, and the segment-wise
    sum tracks totals beyond +-pi in that gauge. The raw total is returned
    without reduction mod 2 pi.

    Args:
        loop: Closed loop of states
        min_overlap: Smallest admissible |<psi_j|psi_j+1>|
        reference: Basis index fixing the gauge; canonical_reference when None

    Returns:
        LoopPhase

    Raises:
        LoopResolutionError: If a consecutive overlap is below min_overlap
    """
    states = loop.states
    if reference is None:
        reference = canonical_reference(states)
    elif np.min(np.abs(states[:, reference])) <= GAUGE_FLOOR:
        logger.warning(f"Gauge reference {reference} vanishes along the loop")
        reference = canonical_reference(states)

    if reference is None:
        logger.warning("No basis component fixes the gauge; using the states as given")
        gauged = states
    else:
        column = states[:, reference]
        gauged = states * (np.conj(column) / np.abs(column))[:, None]

    following = np.roll(gauged, -1, axis=0)
    overlaps = np.einsum("jd,jd->j", np.conj(gauged), following)
    magnitudes = np.abs(overlaps)
    weakest = int(np.argmin(magnitudes))
    if magnitudes[weakest] < min_overlap:
        raise LoopResolutionError(weakest, float(magnitudes[weakest]), min_overlap)

    phase = -float(np.sum(np.angle(overlaps)))
    return LoopPhase(phase=phase, reference=reference, min_overlap=float(magnitudes[weakest]))


def wilson_loop_phase(loop: StateLoop, min_overlap: float = DEFAULT_MIN_OVERLAP) -> float:
    """Berry phase of a closed loop of states (see wilson_loop)."""
    return wilson_loop(loop, min_overlap).phase


def spin_cone_loop(theta: float, steps: int) -> StateLoop:
    """Spin-1/2 coherent states |n(theta, phi)> around a cone, phi over [0, 2 pi]."""
    phis = np.linspace(0.0, 2.0 * math.pi, steps + 1)
    states = np.stack(
        [
            np.full_like(phis, math.cos(0.5 * theta), dtype=np.complex128),
            np.exp(1j * phis) * math.sin(0.5 * theta),
        ],
        axis=1,
    )
    return StateLoop(states)


def mode_loop(lam: float, phi_k: float, steps: int, gamma: float = 1.0) -> StateLoop:
    """Analytic ground state of one mode pair as the rotation angle runs over [0, pi]."""
    phis = np.linspace(0.0, math.pi, steps + 1)
    return StateLoop(np.stack([analytic_mode_state(lam, phi_k, phi, gamma) for phi in phis]))


def mode_berry_phase(lam: float, phi_k: float, steps: int = 2000, gamma: float = 1.0) -> float:
    """
    Per-mode Berry phase -i \\oint <g|dg>, i.e. pi (1 - cos theta_k) in the continuum.

    The gauge is pinned to the empty-pair amplitude, which stays positive for theta_k < pi.
    """
    return -wilson_loop(mode_loop(lam, phi_k, steps, gamma), reference=0).phase
