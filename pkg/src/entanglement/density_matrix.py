"""Two-site reduced density matrices of pure chain states."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.chain.spec import StateVector
from src.exceptions import ConfigurationError, DensityMatrixError

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class DensityMatrix4:
    """Two-qubit density matrix in the basis |uu>, |ud>, |du>, |dd> of sites (i, j)."""

    entries: np.ndarray
    site_pair: Tuple[int, int] = (0, 1)

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=np.complex128)
        if entries.shape != (4, 4):
            raise ConfigurationError(f"two-site density matrix must be 4x4, got {entries.shape}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_pure(cls, amplitudes: np.ndarray, site_pair: Tuple[int, int] = (0, 1)):
        """Projector |psi><psi| of a normalized two-qubit vector."""
        psi = np.asarray(amplitudes, dtype=np.complex128)
        return cls(np.outer(psi, psi.conj()), site_pair)

    def purity(self) -> float:
        return float(np.trace(self.entries @ self.entries).real)

    def validate(self) -> None:
        """Raise DensityMatrixError unless Hermitian, unit-trace and positive semidefinite."""
        entries = self.entries
        if not np.all(np.isfinite(entries)):
            raise DensityMatrixError("density matrix has non-finite entries")
        asymmetry = float(np.max(np.abs(entries - entries.conj().T)))
        if asymmetry > HERMITIAN_TOL:
            raise DensityMatrixError(f"density matrix not Hermitian (deviation {asymmetry:.3e})")
        trace = complex(np.trace(entries))
        if abs(trace - 1.0) > TRACE_TOL:
            raise DensityMatrixError(f"density matrix trace {trace} differs from 1")
        try:
            smallest = float(np.linalg.eigvalsh(0.5 * (entries + entries.conj().T))[0])
        except np.linalg.LinAlgError as e:
            raise DensityMatrixError(f"density matrix spectrum failed: {e}") from e
        if smallest < -POSITIVITY_TOL:
            raise DensityMatrixError(f"density matrix has negative eigenvalue {smallest:.3e}")


def reduced_density_matrix(state: StateVector, i: int, j: int) -> DensityMatrix4:
    """
    Trace out every site except i and j.

    Args:
        state: Normalized chain state
        i: First site (i < j)
        j: Second site

    Returns:
        4x4 density matrix with site i as the first tensor factor
    """
    n_sites = state.n_sites
    if i == j:
        raise ConfigurationError("a two-site density matrix needs two distinct sites")
    if not 0 <= i < j < n_sites:
        raise ConfigurationError(f"sites ({i}, {j}) must satisfy 0 <= i < j < {n_sites}")

    # C-order reshape puts the most significant bit (site N-1) on axis 0
    tensor = state.amplitudes.reshape((2,) * n_sites)
    pair = np.moveaxis(tensor, (n_sites - 1 - i, n_sites - 1 - j), (0, 1)).reshape(4, -1)
    return DensityMatrix4(pair @ pair.conj().T, (i, j))
