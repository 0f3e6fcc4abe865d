"""Unit tests for the two-spin rotating-field model."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.entanglement import pure_concurrence
from src.exceptions import ConfigurationError
from src.toy import (
    ToyParams,
    adiabatic_geometric_phase,
    amplitude_profile,
    analytic_berry_phases,
    concurrence_theta,
    instantaneous_eigenstates,
    mu_factors,
    n_vector,
    period_propagator,
    wilson_berry_phases,
    window_phase,
)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def same_phase(a: float, b: float) -> float:
    """Distance between two phases modulo 2 pi."""
    return abs(math.remainder(a - b, 2 * math.pi))


class TestAnalytic:
    """Test closed-form quantities."""

    @pytest.mark.parametrize(
        "theta,plus,minus",
        [(0.0, 0.0, -2 * math.pi), (math.pi / 2, -math.pi, -math.pi), (math.pi, -2 * math.pi, 0.0)],
    )
    def test_berry_phases(self, theta, plus, minus):
        """Test gamma_plus = -pi (1 - cos theta) and gamma_minus = -pi (1 + cos theta)."""
        gamma_plus, gamma_minus = analytic_berry_phases(theta)
        assert gamma_plus == pytest.approx(plus, abs=1e-14)
        assert gamma_minus == pytest.approx(minus, abs=1e-14)

    def test_phases_sum_to_minus_two_pi(self):
        """Test gamma_plus + gamma_minus = -2 pi on a grid."""
        for theta in np.linspace(0.0, math.pi, 11):
            assert sum(analytic_berry_phases(float(theta))) == pytest.approx(-2 * math.pi)

    def test_mu_factors(self):
        """Test mu at the quarter tilt and sum rule."""
        assert mu_factors(math.pi / 2) == pytest.approx((-0.5, -0.5))
        assert mu_factors(2 * math.pi / 3) == pytest.approx((-0.75, -0.25), abs=1e-15)
        for theta in (0.3, 1.7, 2.9):
            assert sum(mu_factors(theta)) == pytest.approx(-1.0)

    @pytest.mark.parametrize("theta,expected", [(0.0, 0.0), (math.pi / 2, 0.5), (math.pi, 1.0)])
    def test_concurrence(self, theta, expected):
        """Test C(theta) = sin^2(theta / 2)."""
        assert concurrence_theta(theta) == pytest.approx(expected, abs=1e-15)

    def test_amplitude_profile(self):
        """Test the product state at theta = 0 and the singlet weights at pi."""
        assert amplitude_profile(0.0) == pytest.approx((math.sqrt(2.0), 0.0))
        a, b = amplitude_profile(math.pi)
        norm = math.hypot(a, b)
        assert pure_concurrence(a / norm, b / norm) == pytest.approx(1.0)

    def test_eigenstates_at_quarter_tilt(self):
        """Test the x-axis eigenstates at theta = pi/2, t = 0."""
        up, down = instantaneous_eigenstates(math.pi / 2, 0.0, 1.0)
        assert np.allclose(up, np.array([1.0, 1.0]) / math.sqrt(2.0))
        assert np.allclose(down, np.array([1.0, -1.0]) / math.sqrt(2.0))

    @pytest.mark.parametrize("theta,t", [(0.4, 0.0), (1.3, 2.5), (2.8, 5.1)])
    def test_eigenstates_diagonalize_drive(self, theta, t):
        """Test n . sigma |+-> = +-|+-> and orthonormality."""
        n = n_vector(theta, t, 0.7)
        drive = sum(component * pauli for component, pauli in zip(n, PAULI))
        up, down = instantaneous_eigenstates(theta, t, 0.7)
        assert np.linalg.norm(n) == pytest.approx(1.0)
        assert np.allclose(drive @ up, up)
        assert np.allclose(drive @ down, -down)
        assert abs(np.vdot(up, down)) < 1e-14

    def test_rejects_theta_out_of_range(self):
        """Test theta validation."""
        with pytest.raises(ConfigurationError):
            analytic_berry_phases(3.5)


class TestIdentities:
    """Test the exact relations between concurrence, mu and Berry phase."""

    @pytest.mark.parametrize("theta", np.linspace(0.0, math.pi, 1000))
    def test_concurrence_identities(self, theta):
        """Test C = sin^2(theta/2) = |mu_plus| = |gamma_plus| / 2 pi and the amplitude chain."""
        theta = float(theta)
        concurrence = concurrence_theta(theta)
        gamma_plus, gamma_minus = analytic_berry_phases(theta)
        mu_plus, _ = mu_factors(theta)
        a, b = amplitude_profile(theta)
        assert concurrence == pytest.approx(math.sin(0.5 * theta) ** 2, abs=1e-12)
        assert abs(mu_plus) == pytest.approx(concurrence, abs=1e-12)
        assert abs(gamma_plus) / (2 * math.pi) == pytest.approx(concurrence, abs=1e-12)
        assert gamma_plus + gamma_minus == pytest.approx(-2 * math.pi, abs=1e-12)
        halves = pure_concurrence(a / math.sqrt(2.0), b / math.sqrt(2.0))
        assert 2.0 * halves == pytest.approx(concurrence, abs=1e-12)


class TestWindowPhase:
    """Test reduction into (-2 pi, 0]."""

    @pytest.mark.parametrize(
        "phase,expected",
        [(0.5, 0.5 - 2 * math.pi), (-3 * math.pi, -math.pi), (-2 * math.pi, 0.0), (-1.0, -1.0)],
    )
    def test_window(self, phase, expected):
        """Test representative phases."""
        assert window_phase(phase) == pytest.approx(expected, abs=1e-12)


class TestWilsonPhases:
    """Test discrete loops of the instantaneous eigenstates."""

    @pytest.mark.parametrize("theta", [0.3, math.pi / 2, 2.5])
    def test_match_analytic(self, theta):
        """Test both branches against the closed form."""
        plus, minus = wilson_berry_phases(theta, steps=2000)
        expected_plus, expected_minus = analytic_berry_phases(theta)
        assert same_phase(plus, expected_plus) < 1e-5
        assert same_phase(minus, expected_minus) < 1e-5
        assert -2 * math.pi < plus <= 0.0
        assert -2 * math.pi < minus <= 0.0


class TestAdiabatic:
    """Test geometric phases from explicit time evolution."""

    def test_params_validation(self):
        """Test the pydantic constraints."""
        with pytest.raises(ValidationError):
            ToyParams(theta=4.0, omega0=0.01)
        with pytest.raises(ValidationError):
            ToyParams(theta=1.0, omega0=0.0)
        params = ToyParams(theta=1.0, omega0=0.02, field_scale=2.0)
        assert params.ratio == pytest.approx(0.01)
        assert params.period == pytest.approx(100 * math.pi)

    def test_propagator_is_unitary(self):
        """Test U U^dagger = 1."""
        u = period_propagator(ToyParams(theta=1.2, omega0=0.05, steps=1001))
        assert np.allclose(u @ u.conj().T, np.eye(2), atol=1e-12)

    def test_static_axis(self):
        """Test that theta = 0 gives zero geometric phase on both branches."""
        result = adiabatic_geometric_phase(ToyParams(theta=0.0, omega0=0.01, steps=1000))
        assert same_phase(result.gamma_plus, 0.0) < 1e-9
        assert same_phase(result.gamma_minus, -2 * math.pi) < 1e-9
        assert result.leakage < 1e-20

    @pytest.mark.parametrize("theta", [math.pi / 3, math.pi / 2, 2.0])
    def test_recovers_analytic_phase(self, theta):
        """Test the extrapolated phases at omega0 / kB = 0.01."""
        result = adiabatic_geometric_phase(ToyParams(theta=theta, omega0=0.01))
        expected_plus, expected_minus = analytic_berry_phases(theta)
        assert same_phase(result.gamma_plus, expected_plus) < 2e-3
        assert same_phase(result.gamma_minus, expected_minus) < 2e-3
        assert same_phase(result.gamma_plus_raw, expected_plus) < 0.1
        assert not result.non_adiabatic
        assert not result.drive_too_fast
        assert result.norm_drift < 1e-10

    def test_error_shrinks_with_drive_ratio(self):
        """Test that the single-speed phase error falls across ratios 0.1, 0.03 and 0.01."""
        theta = math.pi / 3
        expected, _ = analytic_berry_phases(theta)
        errors = [
            same_phase(
                adiabatic_geometric_phase(
                    ToyParams(theta=theta, omega0=ratio), extrapolate=False
                ).gamma_plus,
                expected,
            )
            for ratio in (0.1, 0.03, 0.01)
        ]
        assert errors[0] > errors[1] > errors[2]

    def test_extrapolation_improves(self):
        """Test that the half-speed run removes most of the bias."""
        result = adiabatic_geometric_phase(ToyParams(theta=math.pi / 3, omega0=0.01))
        expected, _ = analytic_berry_phases(math.pi / 3)
        assert same_phase(result.gamma_plus, expected) < same_phase(result.gamma_plus_raw, expected)

    def test_single_speed(self):
        """Test that extrapolate=False reports the raw phases."""
        result = adiabatic_geometric_phase(
            ToyParams(theta=1.0, omega0=0.01, steps=20_000), extrapolate=False
        )
        assert result.gamma_plus == result.gamma_plus_raw
        assert result.gamma_minus == result.gamma_minus_raw

    def test_fast_drive_flagged(self):
        """Test the flag for a drive faster than the field."""
        result = adiabatic_geometric_phase(
            ToyParams(theta=math.pi / 2, omega0=2.0, steps=1000), extrapolate=False
        )
        assert result.drive_too_fast
        assert 0.0 < result.leakage <= 1.0
