"""Two spins in a field rotating about a tilted axis: closed-form results."""

import math
from typing import Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field

from src.berry.wilson_loop import StateLoop, wilson_loop
from src.exceptions import ConfigurationError

TWO_PI = 2.0 * math.pi
# Angles within this distance of pi are accepted to absorb grid round-off
THETA_SLACK = 1e-12


class ToyParams(BaseModel):
    """Drive of the two-spin model, in units with hbar = 1."""

    theta: float = Field(..., ge=0.0, le=math.pi, description="Tilt of the drive axis from z")
    omega0: float = Field(..., gt=0.0, description="Angular velocity of the drive")
    field_scale: float = Field(1.0, gt=0.0, description="Field energy kB")
    steps: int = Field(100_000, ge=100, description="Time steps per drive period")

    @property
    def ratio(self) -> float:
        """Adiabaticity parameter omega0 / kB."""
        return self.omega0 / self.field_scale

    @property
    def period(self) -> float:
        return TWO_PI / self.omega0


def _check_theta(theta: float) -> float:
    if not -THETA_SLACK <= theta <= math.pi + THETA_SLACK:
        raise ConfigurationError(f"theta must lie in [0, pi], got {theta}")
    return min(max(theta, 0.0), math.pi)


def window_phase(phase: float) -> float:
    """Map a phase into (-2 pi, 0]."""
    reduced = math.remainder(phase, TWO_PI)
    if reduced > 1e-9:
        return reduced - TWO_PI
    return min(reduced, 0.0)


def n_vector(theta: float, t: float, omega0: float) -> np.ndarray:
    """Unit drive direction (sin theta cos w t, sin theta sin w t, cos theta)."""
    angle = omega0 * t
    return np.array(
        [math.sin(theta) * math.cos(angle), math.sin(theta) * math.sin(angle), math.cos(theta)]
    )


def instantaneous_eigenstates(
    theta: float, t: float, omega0: float
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigenstates of n . sigma with eigenvalues +1 and -1.

    The -1 state carries a relative minus sign so that the pair is orthonormal.
    """
    c, s = math.cos(0.5 * theta), math.sin(0.5 * theta)
    phase = np.exp(1j * omega0 * t)
    up = np.array([c, s * phase], dtype=np.complex128)
    down = np.array([s, -c * phase], dtype=np.complex128)
    return up, down


def analytic_berry_phases(theta: float) -> Tuple[float, float]:
    """(gamma_plus, gamma_minus) = (-pi (1 - cos theta), -pi (1 + cos theta))."""
    theta = _check_theta(theta)
    gamma_plus = -TWO_PI * math.sin(0.5 * theta) ** 2
    return gamma_plus, -gamma_plus - TWO_PI


def mu_factors(theta: float) -> Tuple[float, float]:
    """(mu_plus, mu_minus) = (-(1 - cos theta) / 2, -(1 + cos theta) / 2)."""
    theta = _check_theta(theta)
    return -math.sin(0.5 * theta) ** 2, -math.cos(0.5 * theta) ** 2


def amplitude_profile(theta: float) -> Tuple[float, float]:
    """
    Magnitudes (|a|, |b|) of the two-spin state a|ud> - b|du> along the tilt.

    Returned unnormalized: sqrt(2) (cos^2(theta/4), sin^2(theta/4)).
    """
    theta = _check_theta(theta)
    return (
        math.sqrt(2.0) * math.cos(0.25 * theta) ** 2,
        math.sqrt(2.0) * math.sin(0.25 * theta) ** 2,
    )


def concurrence_theta(theta: float) -> float:
    """sin^2(theta / 2): 0 at theta = 0, 1/2 at pi/2, 1 at pi."""
    theta = _check_theta(theta)
    return math.sin(0.5 * theta) ** 2


def wilson_berry_phases(theta: float, steps: int = 2000) -> Tuple[float, float]:
    """
    Berry phases of both instantaneous eigenstates from a discretized drive period.

    Returns:
        (gamma_plus, gamma_minus) in the window (-2 pi, 0]
    """
    theta = _check_theta(theta)
    times = np.linspace(0.0, TWO_PI, steps + 1)
    pairs = [instantaneous_eigenstates(theta, float(t), 1.0) for t in times]
    plus = wilson_loop(StateLoop(np.stack([up for up, _ in pairs]))).phase
    minus = wilson_loop(StateLoop(np.stack([down for _, down in pairs]))).phase
    logger.debug(f"Toy Wilson loops at theta={theta:.6f}: raw phases {plus:.10f}, {minus:.10f}")
    return window_phase(plus), window_phase(minus)
