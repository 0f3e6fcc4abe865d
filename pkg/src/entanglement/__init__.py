"""Two-site entanglement: reduced density matrices and concurrence."""

from .concurrence import pair_concurrence, pure_concurrence, wootters_concurrence
from .density_matrix import DensityMatrix4, reduced_density_matrix

__all__ = [
    "DensityMatrix4",
    "pair_concurrence",
    "pure_concurrence",
    "reduced_density_matrix",
    "wootters_concurrence",
]
