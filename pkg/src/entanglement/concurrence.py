"""Wootters concurrence of two-qubit states."""

import numpy as np

from src.chain.spec import StateVector
from src.entanglement.density_matrix import POSITIVITY_TOL, DensityMatrix4, reduced_density_matrix
from src.exceptions import DensityMatrixError
from src.solvers.dense import dense_eigh

PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SPIN_FLIP = np.kron(PAULI_Y, PAULI_Y)


def _clip_negative(eigenvalues: np.ndarray, what: str) -> np.ndarray:
    if eigenvalues.min() < -POSITIVITY_TOL:
        raise DensityMatrixError(f"{what} has eigenvalue {eigenvalues.min():.3e} below zero")
    return np.clip(eigenvalues, 0.0, None)


def wootters_concurrence(rho: DensityMatrix4) -> float:
    """
    Concurrence max(0, l1 - l2 - l3 - l4) of a two-qubit density matrix.

    The l_i are square roots of the eigenvalues of rho rho_tilde, with
    rho_tilde = (Y x Y) rho* (Y x Y), computed from the Hermitian similar
    product sqrt(rho) rho_tilde sqrt(rho).

    Args:
        rho: Valid two-site density matrix

    Returns:
        Concurrence in [0, 1]
    """
    rho.validate()
    entries = rho.entries
    flipped = SPIN_FLIP @ entries.conj() @ SPIN_FLIP

    weights, vectors = dense_eigh(entries)
    root = (vectors * np.sqrt(_clip_negative(weights, "rho"))) @ vectors.conj().T

    products, _ = dense_eigh(root @ flipped @ root)
    lambdas = np.sort(np.sqrt(_clip_negative(products, "rho rho_tilde")))[::-1]
    value = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]
    return float(min(1.0, max(0.0, value)))


def pure_concurrence(a: complex, b: complex) -> float:
    """C = 2|a||b| for a|ud> - b|du>; the amplitudes are not renormalized."""
    return 2.0 * abs(a) * abs(b)


def pair_concurrence(state: StateVector, i: int, j: int) -> float:
    """Wootters concurrence between sites i and j of a pure chain state."""
    return wootters_concurrence(reduced_density_matrix(state, i, j))
