"""Berry phase of exact ground states of the rotated XY chain."""

import math
from typing import Optional

import numpy as np
from loguru import logger

from src.berry.wilson_loop import MIN_STEPS, StateLoop, wilson_loop
from src.chain.hamiltonian import RotatedChainOperator, chain_operator
from src.chain.spec import ChainSpec, ModelKind
from src.config import Settings, get_settings
from src.exceptions import ConfigurationError, DegenerateLoopError
from src.fermions.reports import PhaseMethod, PhaseReport
from src.solvers.lanczos import LanczosSolver, low_spectrum

MAX_ED_SITES = 16


def _align_phase(vector: np.ndarray, previous: np.ndarray) -> np.ndarray:
    overlap = np.vdot(previous, vector)
    if abs(overlap) == 0.0:
        return vector
    return vector * (np.conj(overlap) / abs(overlap))


def ed_berry_phase(
    spec: ChainSpec,
    steps: int,
    tol: Optional[float] = None,
    settings: Optional[Settings] = None,
) -> PhaseReport:
    """
    Wilson-loop Berry phase of the ground states of H_phi, phi over [0, pi].

    Each grid point is solved with the previous ground state as warm start, and the
    new vector is phase-aligned to its predecessor before it enters the loop.

    Args:
        spec: Transverse XY chain (its phi is ignored)
        steps: Number of loop segments
        tol: Eigensolver residual tolerance (settings default when None)
        settings: Numerical settings

    Returns:
        PhaseReport with method WilsonLoop; metadata records the gauge reference
        and how many spins it has flipped

    Raises:
        DegenerateLoopError: If the ground state is (nearly) degenerate
        ConvergenceError: If a ground-state solve fails
    """
    settings = settings or get_settings()
    if spec.model is not ModelKind.TRANSVERSE_XY:
        raise ConfigurationError("ed_berry_phase needs the transverse XY chain")
    if spec.n_sites > MAX_ED_SITES:
        raise ConfigurationError(f"ED loops are limited to N <= {MAX_ED_SITES}, got {spec.n_sites}")
    if steps < MIN_STEPS:
        raise ConfigurationError(f"steps must be at least {MIN_STEPS}, got {steps}")

    base = chain_operator(spec.replace(phi=0.0))
    # H_phi is unitarily equivalent to H_0, so one gap check covers the whole loop
    lowest = low_spectrum(base.apply, base.dim, k=2, seed=settings.seed)
    gap = float(lowest[1] - lowest[0])
    if gap < settings.gap_threshold:
        logger.error(f"Degenerate ground state: lambda={spec.lam}, gap={gap:.3e}")
        raise DegenerateLoopError(spec.lam, 0.0, gap)

    solver = LanczosSolver.from_settings(settings, tol=tol)
    logger.info(
        f"ED Berry loop: N={spec.n_sites}, lambda={spec.lam}, gamma={spec.gamma}, "
        f"steps={steps}, gap={gap:.6f}"
    )

    phis = np.linspace(0.0, math.pi, steps + 1)
    states = np.empty((steps + 1, base.dim), dtype=np.complex128)
    previous: Optional[np.ndarray] = None
    for j, phi in enumerate(phis):
        operator = RotatedChainOperator(base, float(phi))
        result = solver.ground_state(operator.apply, base.dim, start=previous)
        vector = result.vector / np.linalg.norm(result.vector)
        if previous is not None:
            vector = _align_phase(vector, previous)
        states[j] = vector
        previous = vector

    loop_phase = wilson_loop(StateLoop(states), min_overlap=settings.loop_min_overlap)
    reference = loop_phase.reference
    flipped = bin(reference).count("1") if reference is not None else None
    logger.info(f"ED Berry loop done: gamma={loop_phase.phase:.10f}, reference={reference}")

    return PhaseReport.from_gamma(
        loop_phase.phase,
        PhaseMethod.WILSON_LOOP,
        n_sites=spec.n_sites,
        lam=spec.lam,
        anisotropy=spec.gamma,
        steps=steps,
        gap=gap,
        ground_energy=float(lowest[0]),
        reference_index=reference,
        reference_down_spins=flipped,
        min_overlap=loop_phase.min_overlap,
    )
