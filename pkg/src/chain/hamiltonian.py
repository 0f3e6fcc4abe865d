"""Matrix-free spin-chain Hamiltonians on the 2^N computational basis."""

from functools import lru_cache, reduce
from typing import List, Tuple

import numpy as np
from loguru import logger
from scipy.sparse.linalg import LinearOperator

from src.chain.spec import ChainSpec, ModelKind, StateVector
from src.exceptions import ConfigurationError

PAULI_I = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

DENSE_MAX_SITES = 10
# Each cached operator holds index tables of size O(N 2^N)
OPERATOR_CACHE_SIZE = 4


def _bit(indices: np.ndarray, site: int) -> np.ndarray:
    return (indices >> site) & 1


class SpinChainOperator:
    """
    Hamiltonian of a ChainSpec as a matrix-free operator.

    The action is a diagonal part plus, per bond, a two-spin flip whose
    coefficient depends only on whether the two bits agree.
    """

    def __init__(self, spec: ChainSpec):
        """
        Build index tables for the chain.

        Args:
            spec: Chain descriptor (the rotation angle is ignored here)
        """
        self.spec = spec
        self.dim = spec.dim
        indices = np.arange(self.dim, dtype=np.int64)
        n_down = sum(_bit(indices, site) for site in range(spec.n_sites))
        n_up = spec.n_sites - n_down

        self.diagonal = np.zeros(self.dim, dtype=np.float64)
        self.flips: List[Tuple[np.ndarray, np.ndarray]] = []

        if spec.model is ModelKind.TRANSVERSE_XY:
            # -sum_i sigma^z_i with unit field
            self.diagonal -= n_up - n_down
            for i, j in spec.bonds():
                same = _bit(indices, i) == _bit(indices, j)
                # XX and YY combine to a pair flip (gamma) and a hop (1)
                coef = -spec.lam * np.where(same, spec.gamma, 1.0)
                self._add_flip(indices, i, j, coef)
        else:
            for i, j in spec.bonds():
                same = _bit(indices, i) == _bit(indices, j)
                self.diagonal += np.where(same, 0.25, -0.25)
                self._add_flip(indices, i, j, np.where(same, 0.0, 0.5))

        logger.debug(
            f"Built {spec.model.value} operator: N={spec.n_sites}, "
            f"{len(self.flips)} flip terms, dim={self.dim}"
        )

    def _add_flip(self, indices: np.ndarray, i: int, j: int, coef: np.ndarray) -> None:
        if np.any(coef != 0.0):
            self.flips.append((indices ^ ((1 << i) | (1 << j)), coef))

    def apply(self, vec: np.ndarray) -> np.ndarray:
        """Return H @ vec without materializing H."""
        vec = np.asarray(vec)
        if vec.shape != (self.dim,):
            raise ConfigurationError(f"vector shape {vec.shape} does not match dim {self.dim}")
        out = self.diagonal * vec
        for partner, coef in self.flips:
            out = out + coef * vec[partner]
        return out

    __call__ = apply

    def as_linear_operator(self) -> LinearOperator:
        return LinearOperator((self.dim, self.dim), matvec=self.apply, dtype=np.complex128)


class RotatedChainOperator:
    """H_phi = g_phi H g_phi^dagger with g_phi = prod_i exp(i phi sigma^z_i / 2)."""

    def __init__(self, base: SpinChainOperator, phi: float):
        self.base = base
        self.phi = phi
        self.dim = base.dim
        self.phases = rotation_phases(base.spec.n_sites, phi)

    def apply(self, vec: np.ndarray) -> np.ndarray:
        return self.phases * self.base.apply(np.conj(self.phases) * vec)

    __call__ = apply

    def as_linear_operator(self) -> LinearOperator:
        return LinearOperator((self.dim, self.dim), matvec=self.apply, dtype=np.complex128)


@lru_cache(maxsize=OPERATOR_CACHE_SIZE)
def chain_operator(spec: ChainSpec) -> SpinChainOperator:
    """Cached operator for a spec; rotation angle is dropped from the key."""
    if spec.phi != 0.0:
        return chain_operator(spec.replace(phi=0.0))
    return SpinChainOperator(spec)


def rotated_operator(spec: ChainSpec) -> RotatedChainOperator:
    """Operator for H_phi at the spec's rotation angle."""
    if spec.model is not ModelKind.TRANSVERSE_XY:
        raise ConfigurationError("the rotated family is defined for the transverse XY chain")
    return RotatedChainOperator(chain_operator(spec), spec.phi)


def rotation_phases(n_sites: int, phi: float) -> np.ndarray:
    """Diagonal of g_phi: exp(i phi (n_up - n_down) / 2) per basis index."""
    indices = np.arange(1 << n_sites, dtype=np.int64)
    n_down = sum(_bit(indices, site) for site in range(n_sites))
    return np.exp(0.5j * phi * (n_sites - 2 * n_down))


def _check_state(spec: ChainSpec, state: StateVector) -> None:
    if state.n_sites != spec.n_sites:
        raise ConfigurationError(
            f"state has {state.n_sites} sites but the chain has {spec.n_sites}"
        )


def apply_hamiltonian(spec: ChainSpec, state: StateVector) -> StateVector:
    """
    Apply the chain Hamiltonian to a state.

    Args:
        spec: Chain descriptor
        state: Input state on the same number of sites

    Returns:
        H|state> (not normalized)
    """
    _check_state(spec, state)
    return StateVector(chain_operator(spec).apply(state.amplitudes), spec.n_sites)


def apply_rotation(state: StateVector, phi: float) -> StateVector:
    """Apply g_phi to a state; unitary for every real phi."""
    return StateVector(rotation_phases(state.n_sites, phi) * state.amplitudes, state.n_sites)


def rotated_hamiltonian_apply(spec: ChainSpec, state: StateVector) -> StateVector:
    """Apply H_phi = g_phi H g_phi^dagger as rotate(-phi), H, rotate(+phi)."""
    if spec.model is not ModelKind.TRANSVERSE_XY:
        raise ConfigurationError("the rotated family is defined for the transverse XY chain")
    _check_state(spec, state)
    back = apply_rotation(state, -spec.phi)
    return apply_rotation(apply_hamiltonian(spec, back), spec.phi)


def two_site_block(spec: ChainSpec) -> np.ndarray:
    """4x4 bond Hamiltonian in the (s_i, s_j) basis |uu>, |ud>, |du>, |dd>."""
    if spec.model is ModelKind.TRANSVERSE_XY:
        return -spec.lam * (
            0.5 * (1.0 + spec.gamma) * np.kron(PAULI_X, PAULI_X)
            + 0.5 * (1.0 - spec.gamma) * np.kron(PAULI_Y, PAULI_Y)
        )
    return 0.25 * sum(np.kron(p, p) for p in (PAULI_X, PAULI_Y, PAULI_Z))


def _site_operator(op: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    # Leftmost kron factor is the most significant bit, i.e. site N-1
    factors = [op if s == site else PAULI_I for s in reversed(range(n_sites))]
    return reduce(np.kron, factors)


def _embed_two_site(block: np.ndarray, i: int, j: int, n_sites: int) -> np.ndarray:
    paulis = (PAULI_I, PAULI_X, PAULI_Y, PAULI_Z)
    dim = 1 << n_sites
    out = np.zeros((dim, dim), dtype=np.complex128)
    for a in paulis:
        for b in paulis:
            coef = np.trace(np.kron(a, b) @ block) / 4.0
            if abs(coef) > 0.0:
                out += coef * _site_operator(a, i, n_sites) @ _site_operator(b, j, n_sites)
    return out


def dense_hamiltonian(spec: ChainSpec, rotated: bool = False) -> np.ndarray:
    """
    Materialize H (or H_phi) from two-site blocks, independently of the matvec tables.

    Args:
        spec: Chain descriptor with at most DENSE_MAX_SITES sites
        rotated: Conjugate with g_phi at the spec's rotation angle

    Returns:
        Dense complex matrix of shape (2^N, 2^N)
    """
    if spec.n_sites > DENSE_MAX_SITES:
        raise ConfigurationError(f"dense materialization limited to {DENSE_MAX_SITES} sites")

    block = two_site_block(spec)
    matrix = sum(
        (_embed_two_site(block, i, j, spec.n_sites) for i, j in spec.bonds()),
        np.zeros((spec.dim, spec.dim), dtype=np.complex128),
    )
    if spec.model is ModelKind.TRANSVERSE_XY:
        for site in range(spec.n_sites):
            matrix = matrix - _site_operator(PAULI_Z, site, spec.n_sites)

    if rotated:
        phases = rotation_phases(spec.n_sites, spec.phi)
        matrix = phases[:, None] * matrix * np.conj(phases)[None, :]
    return matrix
