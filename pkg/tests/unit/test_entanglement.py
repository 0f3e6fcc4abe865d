"""Unit tests for reduced density matrices and concurrence."""

import math

import numpy as np
import pytest
from scipy.stats import unitary_group

from src.chain import StateVector
from src.entanglement import (
    DensityMatrix4,
    pair_concurrence,
    pure_concurrence,
    reduced_density_matrix,
    wootters_concurrence,
)
from src.exceptions import ConfigurationError, DensityMatrixError

SINGLET = np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2.0)


def werner(p: float) -> DensityMatrix4:
    return DensityMatrix4(p * np.outer(SINGLET, SINGLET) + (1.0 - p) * np.eye(4) / 4.0)


def brute_force_pair(state: StateVector, i: int, j: int) -> np.ndarray:
    """Partial trace by explicit index loops."""
    psi = state.amplitudes
    rho = np.zeros((4, 4), dtype=np.complex128)
    for row in range(len(psi)):
        for col in range(len(psi)):
            rest = ~((1 << i) | (1 << j))
            if (row & rest) != (col & rest):
                continue
            a = 2 * ((row >> i) & 1) + ((row >> j) & 1)
            b = 2 * ((col >> i) & 1) + ((col >> j) & 1)
            rho[a, b] += psi[row] * np.conj(psi[col])
    return rho


class TestReducedDensityMatrix:
    """Test two-site partial traces."""

    @pytest.mark.parametrize(
        "n_sites,pair",
        [(n, (i, j)) for n in range(2, 6) for i in range(n) for j in range(i + 1, n)],
    )
    def test_matches_brute_force(self, n_sites, pair, random_state):
        """Test the reshape-based trace against index loops for every pair up to five sites."""
        state = random_state(n_sites, 5 + n_sites)
        rho = reduced_density_matrix(state, *pair)
        assert np.max(np.abs(rho.entries - brute_force_pair(state, *pair))) <= 1e-13
        assert rho.site_pair == pair

    def test_invariants_hold(self, random_state):
        """Test Hermiticity, unit trace and positivity of a partial trace."""
        reduced_density_matrix(random_state(6, 2), 1, 4).validate()

    def test_singlet_pair(self, singlet):
        """Test the two-site singlet projector."""
        rho = reduced_density_matrix(singlet, 0, 1)
        assert np.allclose(rho.entries, np.outer(SINGLET, SINGLET), atol=1e-15)
        assert rho.purity() == pytest.approx(1.0)

    def test_same_site_rejected(self, random_state):
        """Test i == j."""
        with pytest.raises(ConfigurationError):
            reduced_density_matrix(random_state(3), 1, 1)

    def test_out_of_range_rejected(self, random_state):
        """Test site indices beyond the chain."""
        with pytest.raises(ConfigurationError):
            reduced_density_matrix(random_state(3), 0, 3)


class TestWoottersConcurrence:
    """Test the Wootters formula."""

    def test_singlet_is_maximal(self, singlet):
        """Test C = 1 for the singlet."""
        assert pair_concurrence(singlet, 0, 1) == pytest.approx(1.0, abs=1e-10)

    def test_product_state(self):
        """Test C = 0 for a basis state."""
        assert pair_concurrence(StateVector.basis(2, 0b10), 0, 1) == pytest.approx(0.0, abs=1e-10)

    def test_werner_state(self):
        """Test C = 0.25 for the Werner state at p = 1/2."""
        assert wootters_concurrence(werner(0.5)) == pytest.approx(0.25, abs=1e-10)

    @pytest.mark.parametrize("p", np.linspace(0.0, 1.0 / 3.0, 20, endpoint=False))
    def test_werner_separable_range(self, p):
        """Test that the Werner state has zero concurrence below p = 1/3."""
        assert wootters_concurrence(werner(p)) == 0.0

    def test_werner_threshold(self):
        """Test that the concurrence vanishes at p = 1/3 and turns on above it."""
        assert wootters_concurrence(werner(1.0 / 3.0)) == pytest.approx(0.0, abs=1e-12)
        assert wootters_concurrence(werner(0.4)) == pytest.approx(0.1, abs=1e-10)

    def test_werner_monotone(self):
        """Test that concurrence grows with the singlet weight."""
        values = [wootters_concurrence(werner(p)) for p in np.linspace(0.0, 1.0, 21)]
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))
        assert values[0] == 0.0

    def test_local_unitary_invariance(self, random_state):
        """Test invariance under U x V on a mixed two-site state."""
        rho = reduced_density_matrix(random_state(4, 9), 0, 1)
        base = wootters_concurrence(rho)
        for seed in range(5):
            u = unitary_group.rvs(2, random_state=seed)
            v = unitary_group.rvs(2, random_state=100 + seed)
            local = np.kron(u, v)
            rotated = DensityMatrix4(local @ rho.entries @ local.conj().T)
            assert wootters_concurrence(rotated) == pytest.approx(base, abs=1e-10)

    @pytest.mark.parametrize("a,b", [(0.6, 0.8), (1.0, 0.0), (0.3, 0.2), (0.5 + 0.5j, 0.1j)])
    def test_pure_state_formula(self, a, b):
        """Test Wootters against 2|a||b| for a|ud> - b|du>."""
        norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        a, b = a / norm, b / norm
        psi = np.array([0.0, a, -b, 0.0], dtype=np.complex128)
        rho = DensityMatrix4.from_pure(psi)
        assert wootters_concurrence(rho) == pytest.approx(pure_concurrence(a, b), abs=1e-10)

    def test_rejects_bad_trace(self):
        """Test trace validation."""
        with pytest.raises(DensityMatrixError):
            wootters_concurrence(DensityMatrix4(np.eye(4) / 2.0))

    def test_rejects_non_hermitian(self):
        """Test Hermiticity validation."""
        entries = np.eye(4) / 4.0
        entries[0, 1] = 0.1
        with pytest.raises(DensityMatrixError):
            wootters_concurrence(DensityMatrix4(entries))

    def test_rejects_negative_eigenvalue(self):
        """Test positivity validation."""
        with pytest.raises(DensityMatrixError):
            wootters_concurrence(DensityMatrix4(np.diag([0.5, 0.5, 0.5, -0.5])))

    def test_rejects_non_finite(self):
        """Test that NaN entries are reported as a density matrix failure."""
        entries = np.eye(4, dtype=np.complex128) / 4.0
        entries[2, 2] = math.nan
        with pytest.raises(DensityMatrixError):
            DensityMatrix4(entries).validate()

    def test_rejects_wrong_shape(self):
        """Test the 4x4 shape requirement."""
        with pytest.raises(ConfigurationError):
            DensityMatrix4(np.eye(2))
