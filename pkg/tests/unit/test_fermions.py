"""Unit tests for the free-fermion solution."""

import math

import numpy as np
import pytest
from scipy import integrate

from src.exceptions import ConfigurationError, QuadratureError
from src.fermions import (
    PhaseMethod,
    adaptive_simpson,
    analytic_mode_state,
    berry_phase_mode_sum,
    berry_phase_thermo,
    bogoliubov_angle,
    concurrence_from_phase,
    cos_theta,
    mode_angles,
)

CRITICAL_PHASE = math.pi - 2.0


def quad_oracle(lam: float, gamma: float = 1.0) -> float:
    def integrand(phi: float) -> float:
        numerator = 1.0 + lam * math.cos(phi)
        denominator = math.hypot(numerator, lam * gamma * math.sin(phi))
        return 1.0 - numerator / denominator

    value, _ = integrate.quad(integrand, 0.0, math.pi, epsabs=1e-13, epsrel=1e-13, limit=500)
    return value


class TestBogoliubovAngle:
    """Test the mixing angle."""

    def test_field_only(self):
        """Test theta = 0 at lambda = 0."""
        assert bogoliubov_angle(0.0, 1.234) == 0.0

    def test_critical_quarter_momentum(self):
        """Test cos theta = 1/sqrt(2) at lambda = 1, phi = pi/2."""
        assert bogoliubov_angle(1.0, math.pi / 2) == pytest.approx(math.pi / 4, abs=1e-14)

    def test_strong_coupling(self):
        """Test cos theta = 1/sqrt(5) at lambda = 2, phi = pi/2."""
        theta = bogoliubov_angle(2.0, math.pi / 2)
        assert math.cos(theta) == pytest.approx(1.0 / math.sqrt(5.0), abs=1e-14)
        assert theta == pytest.approx(1.10715, abs=1e-5)

    def test_removable_singularity(self):
        """Test theta = pi/2 at lambda = 1, phi = pi."""
        assert bogoliubov_angle(1.0, math.pi) == pytest.approx(math.pi / 2, abs=1e-7)
        assert cos_theta(1.0, math.pi) == pytest.approx(0.0, abs=1e-8)

    def test_rejects_bad_arguments(self):
        """Test argument validation."""
        with pytest.raises(ConfigurationError):
            bogoliubov_angle(-0.1, 1.0)
        with pytest.raises(ConfigurationError):
            bogoliubov_angle(1.0, 4.0)
        with pytest.raises(ConfigurationError):
            bogoliubov_angle(1.0, 1.0, gamma=1.5)

    def test_critical_closed_form(self):
        """Test cos theta = cos(phi / 2) at lambda = 1."""
        phis = np.linspace(0.0, math.pi, 2001)
        assert np.allclose(cos_theta(1.0, phis), np.cos(0.5 * phis), atol=1e-12)

    @pytest.mark.parametrize("lam", [0.1, 0.5, 0.9])
    def test_weak_coupling_endpoints(self, lam):
        """Test that theta vanishes at both ends of [0, pi] below the critical point."""
        assert np.allclose(cos_theta(lam, np.array([0.0, math.pi])), 1.0, atol=1e-14)

    @pytest.mark.parametrize("lam", [1.0, 1.5, 3.0, 10.0])
    def test_cos_theta_monotone_from_critical_coupling(self, lam):
        """Test that cos theta is nonincreasing over [0, pi] for lambda >= 1."""
        values = cos_theta(lam, np.linspace(0.0, math.pi, 2001))
        assert np.all(np.diff(values) <= 1e-12)

    @pytest.mark.parametrize("lam", [0.1, 0.5, 0.9, 1.0])
    def test_cos_theta_turns_at_minus_lambda(self, lam):
        """Test that cos theta falls until cos phi = -lambda and rises after, for lambda <= 1."""
        turn = math.acos(-lam)
        falling = cos_theta(lam, np.linspace(0.0, turn, 1001))
        rising = cos_theta(lam, np.linspace(turn, math.pi, 1001))
        assert np.all(np.diff(falling) <= 1e-12)
        assert np.all(np.diff(rising) >= -1e-12)
        assert falling[-1] == pytest.approx(math.sqrt(1.0 - lam**2), abs=1e-12)

    def test_anisotropy_zero_is_trivial(self):
        """Test that gamma = 0 below the field scale leaves every mode empty."""
        assert berry_phase_thermo(0.5, gamma=0.0).gamma == 0.0


class TestModeSum:
    """Test finite-N mode sums."""

    def test_field_only(self):
        """Test Gamma = 0 at lambda = 0."""
        assert berry_phase_mode_sum(7, 0.0).gamma == 0.0

    def test_three_sites(self):
        """Test Gamma = pi/2 at N = 3, lambda = 1."""
        report = berry_phase_mode_sum(3, 1.0)
        assert report.gamma == pytest.approx(math.pi / 2, abs=1e-14)
        assert report.method is PhaseMethod.MODE_SUM
        assert report.metadata["modes"] == 1

    def test_large_ring_mean(self):
        """Test that the per-mode mean approaches pi - 2."""
        report = berry_phase_mode_sum(1001, 1.0)
        assert report.metadata["mean"] == pytest.approx(CRITICAL_PHASE, abs=5e-3)
        assert report.out_of_range

    @pytest.mark.parametrize("n", [2, 1, 10])
    def test_rejects_even_or_small(self, n):
        """Test the odd N >= 3 requirement."""
        with pytest.raises(ConfigurationError):
            berry_phase_mode_sum(n, 1.0)

    def test_mode_angles(self):
        """Test the momentum grid and angle range."""
        angles = mode_angles(9, 1.5)
        assert angles.n_modes == 4
        assert np.allclose(angles.phis, 2 * np.pi * np.arange(1, 5) / 9)
        assert np.all((angles.thetas >= 0.0) & (angles.thetas <= math.pi))

    @pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
    def test_first_order_convergence(self, lam):
        """Test that the mean converges to the integral at least as 1/N."""
        exact = berry_phase_thermo(lam, tol=1e-12).gamma
        sizes = [51, 101, 201, 401, 801]
        errors = [abs(berry_phase_mode_sum(n, lam).metadata["mean"] - exact) for n in sizes]
        assert all(b < a for a, b in zip(errors, errors[1:]))
        assert errors[-1] <= 1.5 * errors[0] * (sizes[0] - 1) / (sizes[-1] - 1)


class TestThermodynamicLimit:
    """Test the quadrature of the Berry-phase integral."""

    def test_field_only(self):
        """Test Gamma(0) = 0 exactly."""
        assert berry_phase_thermo(0.0).gamma == 0.0

    def test_critical_value(self):
        """Test Gamma = pi - 2 at lambda = 1."""
        report = berry_phase_thermo(1.0, tol=1e-10)
        assert report.gamma == pytest.approx(CRITICAL_PHASE, abs=1e-8)
        assert report.concurrence == pytest.approx(0.1816901, abs=1e-6)
        assert report.method is PhaseMethod.QUADRATURE

    @pytest.mark.parametrize("lam", [0.5, 0.99, 1.01, 3.0])
    def test_against_quad_oracle(self, lam):
        """Test against scipy.integrate.quad."""
        assert berry_phase_thermo(lam, tol=1e-11).gamma == pytest.approx(
            quad_oracle(lam), abs=1e-8
        )

    def test_anisotropic_against_oracle(self):
        """Test a partially anisotropic chain."""
        assert berry_phase_thermo(1.4, tol=1e-11, gamma=0.3).gamma == pytest.approx(
            quad_oracle(1.4, 0.3), abs=1e-8
        )

    def test_strong_coupling_limit(self):
        """Test Gamma -> pi as lambda grows."""
        value = berry_phase_thermo(1e3, tol=1e-9).gamma
        assert math.pi - 0.01 <= value <= math.pi

    def test_interval_cap(self):
        """Test that hitting the cap reports the offending lambda."""
        with pytest.raises(QuadratureError) as info:
            berry_phase_thermo(0.5, max_intervals=1)
        assert info.value.lam == 0.5


class TestAdaptiveSimpson:
    """Test the generic integrator."""

    def test_polynomial_is_exact(self):
        """Test that cubics need a single interval."""
        result = adaptive_simpson(lambda x: x**3 - 2 * x, 0.0, 2.0, tol=1e-12)
        assert result.value == pytest.approx(0.0, abs=1e-14)
        assert result.intervals == 1

    def test_reversed_bounds(self):
        """Test that swapping the bounds flips the sign."""
        result = adaptive_simpson(np.sin, math.pi, 0.0, tol=1e-10)
        assert result.value == pytest.approx(-2.0, abs=1e-10)

    def test_square_root_endpoint(self):
        """Test an integrand with unbounded derivative at an endpoint."""
        result = adaptive_simpson(np.sqrt, 0.0, 1.0, tol=1e-10)
        assert result.value == pytest.approx(2.0 / 3.0, abs=1e-9)


class TestPhaseConversion:
    """Test the phase-to-concurrence relation and mode states."""

    @pytest.mark.parametrize(
        "gamma,expected",
        [(0.0, 0.0), (-2 * math.pi, 1.0), (CRITICAL_PHASE, 0.1816901)],
    )
    def test_concurrence_from_phase(self, gamma, expected):
        """Test |gamma| / 2pi."""
        assert concurrence_from_phase(gamma) == pytest.approx(expected, abs=1e-7)

    def test_mode_state_field_only(self):
        """Test the empty pair at lambda = 0."""
        assert np.allclose(analytic_mode_state(0.0, 1.0, 0.7), [1.0, 0.0])

    def test_mode_state_half_angle(self):
        """Test theta_k = pi/2 at phi = 0 (lambda = 1, phi_k = pi)."""
        state = analytic_mode_state(1.0, math.pi, 0.0)
        assert np.allclose(state, [1 / math.sqrt(2), -1j / math.sqrt(2)], atol=1e-7)

    def test_mode_state_rotated(self):
        """Test lambda = 1, phi_k = pi/2, phi = pi/4."""
        state = analytic_mode_state(1.0, math.pi / 2, math.pi / 4)
        expected = [math.cos(math.pi / 8), -1j * np.exp(1j * math.pi / 2) * math.sin(math.pi / 8)]
        assert np.allclose(state, expected, atol=1e-14)
        assert np.linalg.norm(state) == pytest.approx(1.0, abs=1e-15)
