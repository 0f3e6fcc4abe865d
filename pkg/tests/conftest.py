"""Pytest configuration and fixtures."""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.chain import Boundary, ChainSpec, ModelKind, StateVector, chain_operator
from src.config import Settings, get_settings
from src.solvers import GroundStateResult, ground_state


@pytest.fixture(scope="session")
def settings() -> Settings:
    """Get toolkit settings."""
    return get_settings()


@pytest.fixture
def tfim_spec() -> ChainSpec:
    """Small periodic transverse Ising ring away from criticality."""
    return ChainSpec(model=ModelKind.TRANSVERSE_XY, n_sites=5, lam=0.7, gamma=1.0)


@pytest.fixture
def anisotropic_spec() -> ChainSpec:
    """Open XY chain with partial anisotropy."""
    return ChainSpec(
        model=ModelKind.TRANSVERSE_XY, n_sites=4, boundary=Boundary.OPEN, lam=1.3, gamma=0.4
    )


@pytest.fixture
def afm_ring4() -> ChainSpec:
    """Four-site Heisenberg ring."""
    return ChainSpec(model=ModelKind.HEISENBERG_AFM, n_sites=4)


@pytest.fixture
def singlet() -> StateVector:
    """(|ud> - |du>) / sqrt(2) on two sites."""
    amps = np.zeros(4, dtype=np.complex128)
    amps[0b10] = 1.0 / np.sqrt(2.0)
    amps[0b01] = -1.0 / np.sqrt(2.0)
    return StateVector(amps, 2)


@pytest.fixture
def random_state():
    """Factory for normalized random states."""

    def make(n_sites: int, seed: int = 0) -> StateVector:
        return StateVector.random(n_sites, seed)

    return make


@pytest.fixture(scope="session")
def critical_ising_ground_state() -> GroundStateResult:
    """Ground state of the 12-site periodic transverse Ising ring at lambda = 1."""
    spec = ChainSpec(model=ModelKind.TRANSVERSE_XY, n_sites=12, lam=1.0)
    return ground_state(chain_operator(spec).apply, spec.dim, tol=1e-10)


@pytest.fixture(scope="session")
def afm_ground_states() -> dict:
    """Ground states of even Heisenberg rings, keyed by N."""
    states = {}
    for n in (4, 6, 8, 10):
        spec = ChainSpec(model=ModelKind.HEISENBERG_AFM, n_sites=n)
        states[n] = ground_state(chain_operator(spec).apply, spec.dim, tol=1e-11)
    return states
