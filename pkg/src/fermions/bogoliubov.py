"""Jordan-Wigner/Bogoliubov solution of the XY chain in a transverse field."""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from loguru import logger

from src.config import get_settings
from src.exceptions import ConfigurationError, QuadratureError
from src.fermions.quadrature import adaptive_simpson
from src.fermions.reports import PhaseMethod, PhaseReport

ANGLE_SLACK = 1e-12


def _check_parameters(lam: float, gamma: float) -> None:
    if lam < 0.0 or not math.isfinite(lam):
        raise ConfigurationError(f"lambda must be finite and non-negative, got {lam}")
    if not 0.0 <= gamma <= 1.0:
        raise ConfigurationError(f"anisotropy gamma must lie in [0, 1], got {gamma}")


def cos_theta(lam: float, phi: np.ndarray | float, gamma: float = 1.0) -> np.ndarray:
    """
    cos(theta) of the Bogoliubov angle, vectorized over phi.

    Uses 1 + lam cos(phi) = (1 - lam) + 2 lam cos^2(phi/2) so the critical
    point does not suffer cancellation. The removable singularity (numerator
    and denominator both zero) maps to cos(theta) = 0.
    """
    phi = np.asarray(phi, dtype=np.float64)
    numerator = (1.0 - lam) + 2.0 * lam * np.cos(0.5 * phi) ** 2
    denominator = np.hypot(numerator, lam * gamma * np.sin(phi))
    safe = np.where(denominator > 0.0, denominator, 1.0)
    return np.where(denominator > 0.0, numerator / safe, 0.0)


def bogoliubov_angles(lam: float, phis: np.ndarray, gamma: float = 1.0) -> np.ndarray:
    """theta(phi) in [0, pi] for an array of momenta."""
    phis = np.asarray(phis, dtype=np.float64)
    numerator = (1.0 - lam) + 2.0 * lam * np.cos(0.5 * phis) ** 2
    pairing = np.abs(lam * gamma * np.sin(phis))
    thetas = np.arctan2(pairing, numerator)
    return np.where((numerator == 0.0) & (pairing == 0.0), 0.5 * np.pi, thetas)


def bogoliubov_angle(lam: float, phi: float, gamma: float = 1.0) -> float:
    """
    Bogoliubov angle theta of momentum phi.

    Args:
        lam: Coupling (>= 0)
        phi: Momentum in [0, pi]
        gamma: XY anisotropy in [0, 1]; 1 is the transverse Ising chain

    Returns:
        theta in [0, pi]
    """
    _check_parameters(lam, gamma)
    if not -ANGLE_SLACK <= phi <= math.pi + ANGLE_SLACK:
        raise ConfigurationError(f"phi must lie in [0, pi], got {phi}")
    return float(bogoliubov_angles(lam, np.array([phi]), gamma)[0])


@dataclass(frozen=True, eq=False)
class ModeAngles:
    """Bogoliubov angles of the positive momenta phi_k = 2 pi k / N, k = 1..(N-1)/2."""

    n_sites: int
    lam: float
    gamma: float
    thetas: np.ndarray
    phis: np.ndarray

    @property
    def n_modes(self) -> int:
        return len(self.thetas)


def _check_odd(n_sites: int) -> None:
    if n_sites < 3 or n_sites % 2 == 0:
        raise ConfigurationError(f"mode sums need an odd chain length N >= 3, got {n_sites}")


def mode_angles(n_sites: int, lam: float, gamma: float = 1.0) -> ModeAngles:
    _check_odd(n_sites)
    _check_parameters(lam, gamma)
    k = np.arange(1, (n_sites - 1) // 2 + 1)
    phis = 2.0 * np.pi * k / n_sites
    return ModeAngles(n_sites, lam, gamma, bogoliubov_angles(lam, phis, gamma), phis)


def berry_phase_mode_sum(n_sites: int, lam: float, gamma: float = 1.0) -> PhaseReport:
    """
    Finite-N Berry phase as the sum of pi (1 - cos theta_k) over positive modes.

    The raw sum grows with N; metadata["mean"] (sum / M) is the quantity that
    converges to the thermodynamic-limit integral.
    """
    angles = mode_angles(n_sites, lam, gamma)
    # pi (1 - cos theta) = 2 pi sin^2(theta / 2), accurate for small theta
    terms = 2.0 * np.pi * np.sin(0.5 * angles.thetas) ** 2
    total = float(np.sum(terms))
    return PhaseReport.from_gamma(
        total,
        PhaseMethod.MODE_SUM,
        n_sites=n_sites,
        lam=lam,
        anisotropy=gamma,
        modes=angles.n_modes,
        mean=total / angles.n_modes,
    )


def berry_phase_thermo(
    lam: float,
    tol: float = 1e-10,
    gamma: float = 1.0,
    max_intervals: Optional[int] = None,
) -> PhaseReport:
    """
    Thermodynamic-limit Berry phase: the integral of 1 - cos theta(phi) over [0, pi].

    Args:
        lam: Coupling (>= 0)
        tol: Absolute quadrature tolerance
        gamma: XY anisotropy
        max_intervals: Subinterval cap of the adaptive rule (default: settings)

    Returns:
        PhaseReport with method Quadrature

    Raises:
        QuadratureError: If the tolerance is not reached within the cap
    """
    _check_parameters(lam, gamma)
    if max_intervals is None:
        max_intervals = get_settings().quadrature_max_intervals

    def integrand(phi: np.ndarray) -> np.ndarray:
        return 2.0 * np.sin(0.5 * bogoliubov_angles(lam, phi, gamma)) ** 2

    try:
        result = adaptive_simpson(integrand, 0.0, math.pi, tol=tol, max_intervals=max_intervals)
    except QuadratureError as e:
        logger.error(f"Quadrature failed at lambda={lam}: {e}")
        raise QuadratureError(str(e), error_estimate=e.error_estimate, lam=lam) from e

    return PhaseReport.from_gamma(
        result.value,
        PhaseMethod.QUADRATURE,
        lam=lam,
        anisotropy=gamma,
        tol=tol,
        error_estimate=result.error_estimate,
        intervals=result.intervals,
    )


def analytic_mode_state(lam: float, phi_k: float, phi: float, gamma: float = 1.0) -> np.ndarray:
    """
    Ground-state amplitudes of the mode pair (k, -k) at rotation angle phi.

    Returns (cos(theta_k / 2), -i e^{2 i phi} sin(theta_k / 2)) in the basis
    (empty pair, occupied pair).
    """
    theta = bogoliubov_angle(lam, phi_k, gamma)
    return np.array(
        [math.cos(0.5 * theta), -1j * np.exp(2j * phi) * math.sin(0.5 * theta)],
        dtype=np.complex128,
    )
