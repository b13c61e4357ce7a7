# tests/test_dynamics/test_decomposition.py
"""Tests for the velocity decomposition module."""

import numpy as np
import pytest

from statelab.dynamics.decomposition import (
    VelocityDecomposition,
    decompose_velocity,
    velocity_state,
)
from statelab.grid.hilbert import apply_hamiltonian
from statelab.grid.potentials import (
    FreePotential,
    HamiltonianSpec,
    HarmonicPotential,
    LinearPotential,
)
from statelab.manifold.packets import make_packet
from statelab.types import GridSpec, PacketParams

POTENTIALS = {
    "free": FreePotential(),
    "linear": LinearPotential(0.5),
    "harmonic": HarmonicPotential(1.0),
}


class TestVelocityState:
    """Tests for velocity_state."""

    def test_is_minus_i_h_phi(self, grid, moving_packet):
        """Test d phi / dt = -(i / hbar) h phi."""
        h = HamiltonianSpec(potential=HarmonicPotential(1.0), hbar=2.0)
        phi = make_packet(moving_packet, grid)
        expected = -0.5j * apply_hamiltonian(phi, h).amplitudes
        assert np.allclose(velocity_state(phi, h).amplitudes, expected)


class TestDecomposeVelocity:
    """Tests for decompose_velocity."""

    @pytest.mark.parametrize("name", sorted(POTENTIALS))
    def test_components_match_closed_forms(self, name):
        """Test every component against its prediction."""
        h = HamiltonianSpec(potential=POTENTIALS[name])
        decomposition = decompose_velocity(PacketParams(a=0.5, p=1.0), h)
        errors = decomposition.component_errors()
        assert max(errors.values()) < 1e-6, errors

    @pytest.mark.parametrize("name", sorted(POTENTIALS))
    def test_frame_captures_velocity(self, name):
        """Test that the four components exhaust the speed."""
        h = HamiltonianSpec(potential=POTENTIALS[name])
        decomposition = decompose_velocity(PacketParams(a=0.5, p=1.0), h)
        assert decomposition.relative_residual < 1e-8

    def test_free_packet_values(self):
        """Test the free packet with p = 1, sigma = 1."""
        decomposition = decompose_velocity(
            PacketParams(a=0.0, p=1.0), HamiltonianSpec(potential=FreePotential())
        )
        assert decomposition.classical_velocity_comp == pytest.approx(0.5, rel=1e-8)
        assert decomposition.acceleration_comp == pytest.approx(0.0, abs=1e-8)
        assert decomposition.spreading_comp == pytest.approx(np.sqrt(2.0) / 8.0, rel=1e-6)
        assert decomposition.energy == pytest.approx(0.625, rel=1e-8)
        assert decomposition.phase_rate == pytest.approx(0.625, rel=1e-8)

    def test_linear_acceleration(self):
        """Test |F| sigma / hbar for a uniform force."""
        h = HamiltonianSpec(potential=LinearPotential(2.0))
        decomposition = decompose_velocity(PacketParams(a=0.0, p=0.0, sigma=0.5), h)
        assert decomposition.acceleration_comp == pytest.approx(1.0, rel=1e-6)
        assert decomposition.classical_velocity_comp == pytest.approx(0.0, abs=1e-8)

    def test_harmonic_ground_state_does_not_spread(self):
        """Test that the oscillator ground state has no width component."""
        h = HamiltonianSpec(potential=HarmonicPotential(1.0))
        decomposition = decompose_velocity(PacketParams(a=0.0, p=0.0, sigma=np.sqrt(0.5)), h)
        assert decomposition.predicted["spreading"] == pytest.approx(0.0, abs=1e-12)
        assert decomposition.spreading_comp == pytest.approx(0.0, abs=1e-8)

    def test_two_dimensional_packet(self):
        """Test the decomposition in 2D."""
        grid = GridSpec(dim=2, points_per_axis=64, extent=20.0)
        h = HamiltonianSpec(potential=HarmonicPotential(1.0))
        decomposition = decompose_velocity(PacketParams(a=[0.5, 0.0], p=[0.0, 1.0]), h, grid)
        assert decomposition.classical_velocity_vector.shape == (2,)
        assert max(decomposition.component_errors().values()) < 1e-6

    def test_mass_and_hbar_taken_from_hamiltonian(self):
        """Test that the Hamiltonian's constants override the packet's."""
        h = HamiltonianSpec(potential=FreePotential(), mass=2.0)
        decomposition = decompose_velocity(PacketParams(a=0.0, p=1.0), h)
        assert decomposition.predicted["classical_velocity"] == pytest.approx(0.25)
        assert decomposition.classical_velocity_comp == pytest.approx(0.25, rel=1e-8)


class TestVelocityDecomposition:
    """Tests for the VelocityDecomposition result."""

    def test_relative_residual_of_zero_velocity(self):
        """Test that a vanishing velocity has zero relative residual."""
        decomposition = VelocityDecomposition(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
        assert decomposition.relative_residual == 0.0

    def test_component_errors_absolute_fallback(self):
        """Test the absolute comparison for vanishing predictions."""
        decomposition = VelocityDecomposition(
            phase_rate=1.0,
            classical_velocity_comp=0.01,
            acceleration_comp=0.0,
            spreading_comp=0.0,
            total_speed_sq=4.0,
            residual_sq=0.0,
            predicted={
                "phase_rate": 1.0,
                "classical_velocity": 0.0,
                "acceleration": 0.0,
                "spreading": 0.0,
            },
        )
        errors = decomposition.component_errors()
        assert errors["phase_rate"] == 0.0
        assert errors["classical_velocity"] == pytest.approx(0.005)
