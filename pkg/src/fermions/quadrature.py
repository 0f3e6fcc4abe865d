"""Adaptive Simpson quadrature with interval bisection."""

from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np
from loguru import logger

from src.exceptions import ConfigurationError, QuadratureError

# Local tolerances are never halved below this; the Simpson difference is round-off there
TOL_FLOOR = 1e-15

Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass
class QuadratureResult:
    """Integral estimate with bookkeeping."""

    value: float
    error_estimate: float
    intervals: int
    evaluations: int


def _simpson_pair(y: np.ndarray, width: float) -> Tuple[float, float]:
    coarse = (y[0] + 4.0 * y[2] + y[4]) / 6.0 * width
    fine = (y[0] + 4.0 * y[1] + 2.0 * y[2] + 4.0 * y[3] + y[4]) / 12.0 * width
    return float(coarse), float(fine)


def adaptive_simpson(
    func: Integrand,
    a: float,
    b: float,
    tol: float = 1e-10,
    max_intervals: int = 1_000_000,
) -> QuadratureResult:
    """
    Integrate func over [a, b] to absolute tolerance tol.

    Each interval is compared at one and two Simpson panels; accepted intervals
    contribute the extrapolated value (16 fine - coarse) / 15. Rejected intervals
    are bisected with half the tolerance each, reusing the three known samples.

    Args:
        func: Vectorized integrand
        a: Lower bound
        b: Upper bound
        tol: Absolute error tolerance
        max_intervals: Cap on accepted plus pending subintervals

    Returns:
        QuadratureResult

    Raises:
        QuadratureError: If the cap is reached before the tolerance is met
    """
    if tol <= 0.0:
        raise ConfigurationError(f"quadrature tolerance must be positive, got {tol}")
    if a == b:
        return QuadratureResult(0.0, 0.0, 0, 0)
    if a > b:
        flipped = adaptive_simpson(func, b, a, tol, max_intervals)
        flipped.value = -flipped.value
        return flipped

    y = np.asarray(func(np.linspace(a, b, 5)), dtype=np.float64)
    evaluations = 5
    stack: List[Tuple[float, float, np.ndarray, float]] = [(a, b, y, tol)]
    total = 0.0
    error = 0.0
    accepted = 0

    while stack:
        left, right, samples, local_tol = stack.pop()
        coarse, fine = _simpson_pair(samples, right - left)
        difference = abs(fine - coarse)
        if difference < local_tol or local_tol <= TOL_FLOOR:
            total += (16.0 * fine - coarse) / 15.0
            error += difference / 15.0
            accepted += 1
            continue

        if accepted + len(stack) + 2 > max_intervals:
            raise QuadratureError(
                f"adaptive Simpson exceeded {max_intervals} subintervals",
                error_estimate=error + difference,
            )
        mid = 0.5 * (left + right)
        # Quarter points of both halves; the other three samples are reused
        points = np.array(
            [
                left + 0.25 * (mid - left),
                mid + 0.25 * (right - mid),
                left + 0.75 * (mid - left),
                mid + 0.75 * (right - mid),
            ]
        )
        fresh = np.asarray(func(points), dtype=np.float64)
        evaluations += 4
        half_tol = max(0.5 * local_tol, TOL_FLOOR)
        right_half = np.array([samples[2], fresh[1], samples[3], fresh[3], samples[4]])
        left_half = np.array([samples[0], fresh[0], samples[1], fresh[2], samples[2]])
        stack.append((mid, right, right_half, half_tol))
        stack.append((left, mid, left_half, half_tol))

    logger.debug(f"Adaptive Simpson on [{a}, {b}]: {accepted} intervals, {evaluations} evaluations")
    return QuadratureResult(total, error, accepted, evaluations)
