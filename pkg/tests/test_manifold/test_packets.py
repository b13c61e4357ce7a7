# tests/test_manifold/test_packets.py
"""Tests for the packets module."""

import numpy as np
import pytest

from statelab.errors import MarginError
from statelab.grid.hilbert import inner_product, mean_position, norm
from statelab.manifold.packets import (
    check_margin,
    gram_min_singular_value,
    make_packet,
    overlap_discrepancy,
    overlap_gaussian,
    packet_gram_matrix,
    phase_space_overlap_sq,
)
from statelab.types import GridSpec, PacketParams


class TestMakePacket:
    """Tests for make_packet."""

    def test_unit_norm(self, grid, moving_packet):
        """Test that the packet is unit-normalized on the grid."""
        assert norm(make_packet(moving_packet, grid)) == pytest.approx(1.0, abs=1e-12)

    def test_peak_at_center(self, grid):
        """Test that |phi| peaks at the grid site nearest to a."""
        phi = make_packet(PacketParams(a=2.5), grid)
        peak = grid.axis[np.argmax(np.abs(phi.amplitudes))]
        assert peak == pytest.approx(2.5, abs=grid.spacing)

    def test_two_dimensional_center(self):
        """Test the mean position of a 2D packet."""
        grid = GridSpec(dim=2, points_per_axis=64, extent=20.0)
        phi = make_packet(PacketParams(a=[1.0, -1.0], p=[0.0, 0.0]), grid)
        assert np.allclose(mean_position(phi), [1.0, -1.0], atol=1e-10)

    def test_margin_violation_raises(self, grid):
        """Test that packets too close to the boundary are rejected."""
        with pytest.raises(MarginError, match="use extent >="):
            make_packet(PacketParams(a=17.0), grid)


class TestCheckMargin:
    """Tests for check_margin."""

    def test_extra_reach(self, grid):
        """Test that the extra reach is added to the clearance."""
        params = PacketParams(a=0.0)
        check_margin(params, grid, extra=13.0)
        with pytest.raises(MarginError):
            check_margin(params, grid, extra=15.0)

    def test_dimension_mismatch_raises(self, grid):
        """Test that packet and grid dimensions must agree."""
        with pytest.raises(ValueError, match="does not match grid dimension"):
            check_margin(PacketParams(a=[0.0, 0.0], p=[0.0, 0.0]), grid)

    def test_is_value_error(self, grid):
        """Test that MarginError is a ValueError."""
        with pytest.raises(ValueError):
            check_margin(PacketParams(a=19.0), grid)


class TestOverlapGaussian:
    """Tests for the closed-form overlaps."""

    def test_identical_centers(self):
        """Test that a packet overlaps itself with 1."""
        assert overlap_gaussian(1.0, 1.0, 0.7) == 1.0

    def test_known_value(self):
        """Test exp(-|a - b|^2 / 8 sigma^2)."""
        assert overlap_gaussian(0.0, 2.0, 1.0) == pytest.approx(np.exp(-0.5))
        assert overlap_gaussian([0.0, 0.0], [3.0, 4.0], 2.5) == pytest.approx(np.exp(-0.5))

    def test_non_positive_sigma_raises(self):
        """Test that sigma must be positive."""
        with pytest.raises(ValueError, match="sigma must be positive"):
            overlap_gaussian(0.0, 1.0, 0.0)

    @pytest.mark.parametrize("b", [0.5, 1.5, 4.0])
    def test_matches_grid(self, b):
        """Test that the closed form matches the grid inner product."""
        assert overlap_discrepancy(0.0, b, 1.0) < 1e-10

    def test_phase_space_momentum_only(self):
        """Test the momentum term exp(-|p - q|^2 sigma^2 / hbar^2)."""
        value = phase_space_overlap_sq(0.0, 0.0, 0.0, 1.0, sigma=1.0)
        assert value == pytest.approx(np.exp(-1.0))

    def test_phase_space_matches_grid(self, fine_grid):
        """Test the transition probability against the grid."""
        phi = make_packet(PacketParams(a=0.0, p=0.5), fine_grid)
        psi = make_packet(PacketParams(a=1.0, p=-0.5), fine_grid)
        grid_value = abs(inner_product(phi, psi)) ** 2
        assert phase_space_overlap_sq(0.0, 0.5, 1.0, -0.5, 1.0) == pytest.approx(
            grid_value, abs=1e-10
        )


class TestGram:
    """Tests for packet Gram matrices."""

    def test_closed_form_matches_grid(self, fine_grid):
        """Test closed-form and grid Gram matrices agree."""
        centers = [-1.0, 0.0, 0.5, 2.0]
        closed = packet_gram_matrix(centers, 1.0)
        on_grid = packet_gram_matrix(centers, 1.0, fine_grid)
        assert np.allclose(closed, on_grid, atol=1e-10)

    def test_unit_diagonal_and_hermitian(self):
        """Test the structure of the Gram matrix."""
        gram = packet_gram_matrix([0.0, 1.0, 3.0], 0.5)
        assert np.allclose(np.diag(gram), 1.0)
        assert np.allclose(gram, gram.conj().T)

    def test_min_singular_value(self):
        """Test that far-apart packets are independent and coincident ones are not."""
        far = packet_gram_matrix([0.0, 50.0, 100.0], 1.0)
        coincident = packet_gram_matrix([0.0, 0.0], 1.0)
        assert gram_min_singular_value(far) == pytest.approx(1.0)
        assert gram_min_singular_value(coincident) == pytest.approx(0.0, abs=1e-12)
