# tests/test_walks/test_constrained.py
"""Tests for constrained walks on the packet manifold."""

import numpy as np
import pytest

from statelab.errors import MarginError
from statelab.logger import PandasLogger
from statelab.manifold.packets import make_packet
from statelab.types import GridSpec, PacketParams, SimulationEvent
from statelab.walks.config import RecordPolicy, WalkConfig
from statelab.walks.constrained import constrained_ensemble, translation_error, walk_constrained


@pytest.fixture
def walk_config():
    """Provide a small translation walk configuration."""
    return WalkConfig(n_steps=20, dt=0.1, n_trials=6, master_seed=2, step_std=1.0, chunk_size=4)


class TestWalkConstrained:
    """Tests for walk_constrained."""

    def test_stays_on_manifold(self, grid, moving_packet, walk_config):
        """Test that the walk ends at the translated packet."""
        record, displacement = walk_constrained(moving_packet, walk_config, grid, trial=1)
        assert record.metadata["translation_error"] < 1e-10
        assert record.distances.shape == (21,)
        assert record.distances[0] == 0.0
        assert displacement.shape == (1,)

    def test_explicit_steps(self, grid, moving_packet):
        """Test a prescribed walk and its closed-form final distance."""
        cfg = WalkConfig(n_steps=4, dt=0.5)
        steps = np.array([[1.0], [1.0], [-0.5], [0.5]])
        record, displacement = walk_constrained(moving_packet, cfg, grid, steps=steps)
        assert displacement.tolist() == [1.0]
        expected = np.arccos(np.exp(-1.0 / 8.0))
        assert record.distances[-1] == pytest.approx(expected, abs=1e-9)

    def test_distance_depends_on_displacement_only(self, grid, moving_packet):
        """Test that the path does not matter, only its endpoint."""
        cfg = WalkConfig(n_steps=2, dt=1.0)
        straight, _ = walk_constrained(moving_packet, cfg, grid, steps=np.array([[0.5], [0.5]]))
        detour, _ = walk_constrained(moving_packet, cfg, grid, steps=np.array([[2.0], [-1.0]]))
        assert straight.distances[-1] == pytest.approx(detour.distances[-1], abs=1e-12)

    def test_translation_error_detects_wrong_state(self, grid, moving_packet):
        """Test that an untranslated state is flagged."""
        phi = make_packet(moving_packet, grid)
        assert translation_error(phi, moving_packet, np.array([0.0])) < 1e-12
        assert translation_error(phi, moving_packet, np.array([1.0])) > 0.1

    def test_wrong_step_shape_raises(self, grid, moving_packet):
        """Test that prescribed steps must have shape (n_steps, d)."""
        with pytest.raises(ValueError, match="steps must have shape"):
            walk_constrained(moving_packet, WalkConfig(n_steps=3), grid, steps=np.zeros((2, 1)))

    def test_margin_violation_raises(self, grid, moving_packet):
        """Test that walks leaving the grid margin are rejected."""
        cfg = WalkConfig(n_steps=2, dt=1.0)
        with pytest.raises(MarginError):
            walk_constrained(moving_packet, cfg, grid, steps=np.array([[10.0], [5.0]]))

    def test_two_dimensional(self, walk_config):
        """Test a walk in 2D."""
        grid = GridSpec(dim=2, points_per_axis=64, extent=24.0)
        params = PacketParams(a=[0.0, 0.0], p=[1.0, 0.0])
        record, displacement = walk_constrained(params, walk_config, grid)
        assert displacement.shape == (2,)
        assert record.metadata["translation_error"] < 1e-8


class TestConstrainedEnsemble:
    """Tests for constrained_ensemble."""

    def test_matches_single_trials(self, grid, moving_packet, walk_config):
        """Test that ensemble trial j equals walk_constrained(trial=j)."""
        ensemble = constrained_ensemble(moving_packet, walk_config, grid)
        record, displacement = walk_constrained(moving_packet, walk_config, grid, trial=4)
        assert np.allclose(ensemble.distances[4], record.distances, atol=1e-12)
        assert np.allclose(ensemble.displacements[4, -1], displacement)

    def test_shapes_and_diagnostics(self, grid, moving_packet, walk_config):
        """Test the ensemble layout and translation check."""
        logger = PandasLogger()
        ensemble = constrained_ensemble(moving_packet, walk_config, grid, logger)
        assert ensemble.distances.shape == (6, 21)
        assert ensemble.displacements.shape == (6, 21, 1)
        assert np.all(ensemble.displacements[:, 0] == 0.0)
        assert ensemble.metadata["max_translation_error"] < 1e-10
        assert logger.count(SimulationEvent.TRIAL_FINISHED) == 2

    def test_summary_policy(self, grid, moving_packet):
        """Test that SUMMARY keeps final distances and full displacements."""
        cfg = WalkConfig(n_steps=20, dt=0.1, n_trials=3, record=RecordPolicy.SUMMARY)
        full = constrained_ensemble(moving_packet, WalkConfig(n_steps=20, dt=0.1, n_trials=3), grid)
        summary = constrained_ensemble(moving_packet, cfg, grid)
        assert summary.distances.shape == (3, 1)
        assert np.allclose(summary.final_distances, full.final_distances, atol=1e-12)

    def test_displacement_variance(self, grid, moving_packet):
        """Test Var(d) = n dt^2 s_xi^2 for independent steps."""
        cfg = WalkConfig(n_steps=10, dt=0.1, n_trials=2000, master_seed=1, chunk_size=500)
        ensemble = constrained_ensemble(moving_packet, cfg, grid)
        final = ensemble.displacements[:, -1, 0]
        assert np.var(final) == pytest.approx(0.1, rel=0.1)
