"""Eigensolvers: iterative ground states and small dense problems."""

from .dense import dense_eigh, materialize
from .lanczos import GroundStateResult, LanczosSolver, ground_state, low_spectrum

__all__ = [
    "GroundStateResult",
    "LanczosSolver",
    "dense_eigh",
    "ground_state",
    "low_spectrum",
    "materialize",
]
