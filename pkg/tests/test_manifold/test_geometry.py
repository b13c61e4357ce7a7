# tests/test_manifold/test_geometry.py
"""Tests for the Fubini-Study geometry module."""

import numpy as np
import pytest

from statelab.manifold.geometry import (
    euclidean_distance_from_angle,
    fubini_study_distance,
    fubini_study_distance_vectors,
    metric_identity_residual,
    phase_space_metric_identity_residual,
    shifted_operator_identity_residuals,
    tangent_frame,
)
from statelab.manifold.packets import make_packet
from statelab.types import GridSpec, PacketParams


class TestFubiniStudyDistance:
    """Tests for Fubini-Study distances."""

    def test_same_ray(self, grid, moving_packet):
        """Test that a state and its global phase are at distance zero."""
        phi = make_packet(moving_packet, grid)
        rotated = phi.with_amplitudes(np.exp(0.7j) * phi.amplitudes)
        assert fubini_study_distance(phi, rotated) == pytest.approx(0.0, abs=1e-7)

    def test_packets_at_rest(self, fine_grid):
        """Test cos theta = exp(-|a - b|^2 / 8 sigma^2)."""
        phi = make_packet(PacketParams(a=0.0), fine_grid)
        psi = make_packet(PacketParams(a=2.0), fine_grid)
        assert fubini_study_distance(phi, psi) == pytest.approx(np.arccos(np.exp(-0.5)), abs=1e-9)

    def test_range(self, fine_grid):
        """Test that distant packets approach pi / 2."""
        phi = make_packet(PacketParams(a=-10.0), fine_grid)
        psi = make_packet(PacketParams(a=10.0), fine_grid)
        assert fubini_study_distance(phi, psi) == pytest.approx(np.pi / 2)

    def test_vectorized(self, unit_vector):
        """Test distances from one vector to a stack."""
        other = np.zeros_like(unit_vector)
        other[0] = 1.0
        other -= np.vdot(unit_vector, other) * unit_vector
        other /= np.linalg.norm(other)
        stack = np.stack([unit_vector, 1j * unit_vector, other])
        distances = fubini_study_distance_vectors(unit_vector, stack)
        assert distances.shape == (3,)
        assert distances[:2] == pytest.approx([0.0, 0.0], abs=1e-7)
        assert distances[2] == pytest.approx(np.pi / 2)

    def test_euclidean_from_angle(self):
        """Test the inversion of the metric identity."""
        theta = np.arccos(np.exp(-0.5))
        assert euclidean_distance_from_angle(theta, 1.0) == pytest.approx(2.0)
        assert euclidean_distance_from_angle(0.0, 1.0) == 0.0


class TestMetricIdentity:
    """Tests for the position and phase-space metric identities."""

    @pytest.mark.parametrize("b", [0.1, 1.0, 3.0])
    def test_position_identity(self, b):
        """Test exp(-|a - b|^2 / 4 sigma^2) = cos^2 theta on the grid."""
        assert metric_identity_residual(0.0, b, 1.0) < 1e-10

    def test_position_identity_two_dimensions(self):
        """Test the identity for a 2D displacement."""
        grid = GridSpec(dim=2, points_per_axis=64, extent=24.0)
        assert metric_identity_residual([0.0, 0.0], [1.0, 1.0], 1.0, grid) < 1e-10

    def test_phase_space_identity(self):
        """Test the identity with a momentum difference."""
        assert phase_space_metric_identity_residual(0.0, 0.0, 0.5, 1.0, 1.0) < 1e-10


class TestTangentFrame:
    """Tests for tangent_frame."""

    def test_labels(self, grid, moving_packet):
        """Test the frame labels in 1D."""
        frame = tangent_frame(moving_packet, grid)
        assert frame.labels() == ["a0", "p0", "spread", "phase"]
        assert len(frame.vectors()) == 4

    def test_orthonormal(self, grid, moving_packet):
        """Test that the real-metric Gram matrix is the identity."""
        frame = tangent_frame(moving_packet, grid)
        assert np.allclose(frame.gram(), np.eye(4), atol=1e-8)

    def test_orthonormal_two_dimensions(self):
        """Test the 2D frame."""
        grid = GridSpec(dim=2, points_per_axis=64, extent=16.0)
        frame = tangent_frame(PacketParams(a=[0.5, -0.5], p=[1.0, 0.0]), grid)
        assert frame.labels() == ["a0", "a1", "p0", "p1", "spread", "phase"]
        assert np.allclose(frame.gram(), np.eye(6), atol=1e-8)

    def test_components_of_frame_vector(self, grid, rest_packet):
        """Test that a frame vector has a single unit component."""
        frame = tangent_frame(rest_packet, grid)
        components = frame.components(frame.e_p[0])
        assert components["p0"] == pytest.approx(1.0)
        assert components["a0"] == pytest.approx(0.0, abs=1e-10)
        assert components["phase"] == pytest.approx(0.0, abs=1e-10)

    def test_base_is_the_packet(self, grid, moving_packet):
        """Test that the frame is attached to make_packet(params)."""
        frame = tangent_frame(moving_packet, grid)
        assert np.allclose(frame.base.amplitudes, make_packet(moving_packet, grid).amplitudes)


class TestShiftedOperatorIdentity:
    """Tests for shifted_operator_identity_residuals."""

    def test_holds_with_positive_sign(self, fine_grid):
        """Test that both identities hold with p = -i hbar d/dx."""
        position, momentum = shifted_operator_identity_residuals(
            PacketParams(a=0.5, p=1.0), fine_grid, sign=1
        )
        assert position < 1e-12
        assert momentum < 1e-8

    def test_fails_with_negative_sign(self, fine_grid):
        """Test that the opposite sign leaves a residual of hbar / sigma."""
        _, momentum = shifted_operator_identity_residuals(
            PacketParams(a=0.5, p=1.0), fine_grid, sign=-1
        )
        assert momentum == pytest.approx(1.0, rel=1e-6)

    def test_invalid_sign_raises(self, grid, rest_packet):
        """Test that sign must be +1 or -1."""
        with pytest.raises(ValueError, match="sign must be"):
            shifted_operator_identity_residuals(rest_packet, grid, sign=0)
