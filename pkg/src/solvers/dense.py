"""Dense Hermitian eigensolver for small matrices."""

import math
from typing import Callable, Tuple

import numpy as np
from scipy import linalg

from src.exceptions import ConfigurationError, ConvergenceError

DENSE_MAX_DIM = 64
HERMITIAN_TOL = 1e-10


def dense_eigh(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Diagonalize a small Hermitian matrix.

    The input is symmetrized before diagonalization, so round-off asymmetry in
    products such as sqrt(rho) rho_tilde sqrt(rho) does not leak into the spectrum.

    Args:
        matrix: Square Hermitian matrix of dimension at most 64

    Returns:
        Eigenvalues in ascending order and the matrix of orthonormal eigenvectors (columns)

    Raises:
        ConvergenceError: If LAPACK fails, e.g. on non-finite entries
    """
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ConfigurationError(f"dense_eigh needs a square matrix, got shape {matrix.shape}")
    if matrix.shape[0] > DENSE_MAX_DIM:
        raise ConfigurationError(
            f"dense_eigh is limited to dimension {DENSE_MAX_DIM}, got {matrix.shape[0]}"
        )

    scale = max(1.0, float(np.max(np.abs(matrix)))) if matrix.size else 1.0
    asymmetry = float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0
    if asymmetry > HERMITIAN_TOL * scale:
        raise ConfigurationError(f"matrix is not Hermitian (deviation {asymmetry:.3e})")

    hermitian = 0.5 * (matrix + matrix.conj().T)
    try:
        eigenvalues, eigenvectors = linalg.eigh(hermitian)
    except (linalg.LinAlgError, ValueError) as e:
        raise ConvergenceError(
            f"dense diagonalization failed: {e}", best_residual=math.nan, iterations=0
        ) from e
    return eigenvalues, eigenvectors


def materialize(apply: Callable[[np.ndarray], np.ndarray], dim: int) -> np.ndarray:
    """Build the dense matrix of a linear operator column by column."""
    identity = np.eye(dim, dtype=np.complex128)
    return np.stack([np.asarray(apply(identity[:, k])) for k in range(dim)], axis=1)
