"""Spin-1/2 chain models: descriptors, states and matrix-free Hamiltonians."""

from .hamiltonian import (
    RotatedChainOperator,
    SpinChainOperator,
    apply_hamiltonian,
    apply_rotation,
    chain_operator,
    dense_hamiltonian,
    rotated_hamiltonian_apply,
    rotated_operator,
)
from .spec import Boundary, ChainSpec, ModelKind, StateVector

__all__ = [
    "Boundary",
    "ChainSpec",
    "ModelKind",
    "RotatedChainOperator",
    "SpinChainOperator",
    "StateVector",
    "apply_hamiltonian",
    "apply_rotation",
    "chain_operator",
    "dense_hamiltonian",
    "rotated_hamiltonian_apply",
    "rotated_operator",
]
