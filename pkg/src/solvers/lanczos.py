"""Lanczos ground-state solver for matrix-free Hermitian operators."""

from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np
from loguru import logger
from scipy import linalg
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence, LinearOperator, eigsh
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from src.config import Settings
from src.exceptions import ConfigurationError, ConvergenceError
from src.solvers.dense import DENSE_MAX_DIM, dense_eigh, materialize

MAX_DIM = 1 << 20
# Rows added to the Krylov basis each time it fills up
BASIS_CHUNK = 16
Apply = Callable[[np.ndarray], np.ndarray]


@dataclass
class GroundStateResult:
    """Lowest eigenpair of a Hermitian operator."""

    energy: float
    vector: np.ndarray
    iterations: int
    residual_norm: float


@dataclass
class _RunState:
    start: np.ndarray
    iterations: int = 0
    last_residual: float = np.inf
    best: Optional[GroundStateResult] = field(default=None)


class _NotConverged(Exception):
    """Internal signal that triggers a restart."""


def _start_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    return rng.standard_normal(dim) + 1j * rng.standard_normal(dim)


def _check_dim(dim: int) -> None:
    if dim < 1 or dim > MAX_DIM:
        raise ConfigurationError(f"operator dimension {dim} outside [1, {MAX_DIM}]")


class LanczosSolver:
    """Explicitly restarted Lanczos with full reorthogonalization."""

    def __init__(
        self,
        tol: float = 1e-10,
        max_krylov: int = 200,
        max_restarts: int = 5,
        seed: int = 0,
    ):
        """
        Initialize solver.

        Args:
            tol: Residual tolerance ||Hv - Ev||
            max_krylov: Maximum Krylov dimension per cycle
            max_restarts: Restarts allowed after the first cycle
            seed: Seed of the counter-based start-vector generator
        """
        if tol <= 0.0:
            raise ConfigurationError(f"tolerance must be positive, got {tol}")
        self.tol = tol
        self.max_krylov = max_krylov
        self.max_restarts = max_restarts
        self.seed = seed

    @classmethod
    def from_settings(cls, settings: Settings, tol: float | None = None) -> "LanczosSolver":
        return cls(
            tol=tol if tol is not None else settings.eigensolver_tol,
            max_krylov=settings.eigensolver_max_krylov,
            max_restarts=settings.eigensolver_max_restarts,
            seed=settings.seed,
        )

    def ground_state(
        self, apply: Apply, dim: int, start: Optional[np.ndarray] = None
    ) -> GroundStateResult:
        """
        Compute the lowest eigenpair.

        Args:
            apply: Hermitian matrix-vector product
            dim: Operator dimension
            start: Optional start vector (warm start); a seeded random vector otherwise

        Returns:
            Converged ground state with residual below tolerance

        Raises:
            ConvergenceError: If the tolerance is not met after all restarts
        """
        _check_dim(dim)
        rng = np.random.Generator(np.random.Philox(self.seed))
        initial = np.asarray(start, dtype=np.complex128) if start is not None else None
        if initial is None or np.linalg.norm(initial) == 0.0:
            initial = _start_vector(rng, dim)
        run = _RunState(start=initial)

        try:
            for attempt in Retrying(
                stop=stop_after_attempt(self.max_restarts + 1),
                retry=retry_if_exception_type(_NotConverged),
                reraise=True,
            ):
                with attempt:
                    self._cycle(apply, dim, run, rng)
        except _NotConverged:
            best = run.best
            assert best is not None
            logger.error(
                f"Lanczos did not converge: dim={dim}, residual={best.residual_norm:.3e}, "
                f"tol={self.tol:.1e}"
            )
            raise ConvergenceError(
                f"ground state not converged after {self.max_restarts} restarts",
                best_residual=best.residual_norm,
                iterations=run.iterations,
            )

        assert run.best is not None
        logger.debug(
            f"Lanczos converged: dim={dim}, E={run.best.energy:.12f}, "
            f"residual={run.best.residual_norm:.2e}, iterations={run.iterations}"
        )
        return run.best

    def _cycle(self, apply: Apply, dim: int, run: _RunState, rng: np.random.Generator) -> None:
        vector, energy, residual, steps = self._krylov(apply, dim, run.start)
        run.iterations += steps

        if run.best is None or residual < run.best.residual_norm:
            run.best = GroundStateResult(
                energy=energy, vector=vector, iterations=run.iterations, residual_norm=residual
            )
        if residual <= self.tol:
            return

        if residual > 0.5 * run.last_residual:
            # Stagnating Krylov space: kick the Ritz vector with a fresh deterministic direction
            logger.warning(f"Lanczos stagnating at residual {residual:.3e}, perturbing restart")
            kick = _start_vector(rng, dim)
            run.start = vector + 1e-3 * kick / np.linalg.norm(kick)
        else:
            logger.debug(f"Lanczos restart from Ritz vector, residual {residual:.3e}")
            run.start = vector
        run.last_residual = residual
        raise _NotConverged()

    def _krylov(
        self, apply: Apply, dim: int, start: np.ndarray
    ) -> Tuple[np.ndarray, float, float, int]:
        m_max = min(self.max_krylov, dim)
        basis = np.empty((min(BASIS_CHUNK, m_max), dim), dtype=np.complex128)
        alphas: list[float] = []
        betas: list[float] = []

        v = start / np.linalg.norm(start)
        for k in range(m_max):
            if k == basis.shape[0]:
                grow = min(BASIS_CHUNK, m_max - k)
                basis = np.concatenate([basis, np.empty((grow, dim), dtype=np.complex128)])
            basis[k] = v
            w = np.asarray(apply(v), dtype=np.complex128)
            alphas.append(float(np.vdot(v, w).real))

            # Classical Gram-Schmidt against the whole basis, twice
            for _ in range(2):
                w = w - basis[: k + 1].T @ (basis[: k + 1].conj() @ w)
            beta = float(np.linalg.norm(w))

            breakdown = 1e-13 * max(1.0, max(abs(a) for a in alphas))
            if k + 1 == m_max or beta < breakdown:
                break
            if (k + 1) % 10 == 0:
                _, ritz_vectors = _tridiagonal_eigh(alphas, betas)
                if beta * abs(ritz_vectors[-1, 0]) < 0.1 * self.tol:
                    break
            betas.append(beta)
            v = w / beta

        _, ritz_vectors = _tridiagonal_eigh(alphas, betas)
        vector = basis[: len(alphas)].T @ ritz_vectors[:, 0]
        vector = vector / np.linalg.norm(vector)
        h_vector = np.asarray(apply(vector), dtype=np.complex128)
        energy = float(np.vdot(vector, h_vector).real)
        residual = float(np.linalg.norm(h_vector - energy * vector))
        return vector, energy, residual, len(alphas)


def _tridiagonal_eigh(alphas: list[float], betas: list[float]) -> Tuple[np.ndarray, np.ndarray]:
    if len(alphas) == 1:
        return np.array(alphas), np.ones((1, 1))
    try:
        return linalg.eigh_tridiagonal(np.array(alphas), np.array(betas))
    except (linalg.LinAlgError, ValueError) as e:
        raise ConvergenceError(
            f"tridiagonal eigenproblem failed: {e}", best_residual=np.nan, iterations=len(alphas)
        ) from e


def ground_state(
    apply: Apply,
    dim: int,
    tol: float = 1e-10,
    seed: int = 0,
    start: Optional[np.ndarray] = None,
    max_krylov: int = 200,
    max_restarts: int = 5,
) -> GroundStateResult:
    """Lowest eigenpair of a matrix-free Hermitian operator (see LanczosSolver)."""
    solver = LanczosSolver(tol=tol, max_krylov=max_krylov, max_restarts=max_restarts, seed=seed)
    return solver.ground_state(apply, dim, start=start)


def low_spectrum(apply: Apply, dim: int, k: int = 2, seed: int = 0) -> np.ndarray:
    """
    Lowest k eigenvalues, ascending.

    Dense diagonalization for dim <= 64, ARPACK otherwise. Unlike a single Lanczos
    run this resolves degenerate ground spaces, so it is used for gap checks.

    Raises:
        ConvergenceError: If ARPACK or LAPACK fails
    """
    _check_dim(dim)
    if k >= dim or dim <= DENSE_MAX_DIM:
        eigenvalues, _ = dense_eigh(materialize(apply, dim))
        return eigenvalues[:k]

    rng = np.random.Generator(np.random.Philox(seed))
    operator = LinearOperator((dim, dim), matvec=apply, dtype=np.complex128)
    try:
        eigenvalues = eigsh(
            operator, k=k, which="SA", v0=_start_vector(rng, dim), return_eigenvectors=False
        )
    except ArpackNoConvergence as e:
        logger.error(f"ARPACK did not converge: dim={dim}, k={k}, found={len(e.eigenvalues)}")
        raise ConvergenceError(
            f"lowest {k} eigenvalues not converged", best_residual=np.nan, iterations=0
        ) from e
    except ArpackError as e:
        raise ConvergenceError(f"ARPACK failed: {e}", best_residual=np.nan, iterations=0) from e
    return np.sort(np.real(eigenvalues))
