# tests/test_walks/test_walk_config.py
"""Tests for walk configuration, records and seeding."""

import numpy as np
import pytest

from statelab.walks.config import (
    RecordPolicy,
    WalkConfig,
    WalkEnsemble,
    WalkRecord,
    trial_rng,
    trial_seed,
)


class TestSeeding:
    """Tests for per-trial seeding."""

    def test_same_trial_same_stream(self):
        """Test that a trial's generator is reproducible."""
        assert trial_rng(7, 3).random(4).tolist() == trial_rng(7, 3).random(4).tolist()

    def test_trials_differ(self):
        """Test that trials and master seeds give different streams."""
        assert trial_rng(7, 3).random() != trial_rng(7, 4).random()
        assert trial_rng(7, 3).random() != trial_rng(8, 3).random()

    def test_matches_seed_sequence(self):
        """Test the derivation rule SeedSequence(master, spawn_key=(trial,))."""
        expected = np.random.default_rng(np.random.SeedSequence(11, spawn_key=(2,))).random()
        assert trial_rng(11, 2).random() == expected

    def test_trial_seed_digest(self):
        """Test the 64-bit digest used in manifests."""
        seed = trial_seed(0, 0)
        assert seed == trial_seed(0, 0)
        assert seed != trial_seed(0, 1)
        assert 0 <= seed < 2**64


class TestWalkConfig:
    """Tests for WalkConfig."""

    def test_defaults(self):
        """Test default values."""
        cfg = WalkConfig()
        assert cfg.n_steps == 100
        assert cfg.dt == 0.1
        assert cfg.record == RecordPolicy.FULL
        assert cfg.ensemble is None

    def test_record_policy_from_string(self):
        """Test that the record policy is coerced from its value."""
        assert WalkConfig(record="summary").record == RecordPolicy.SUMMARY

    def test_chunks(self):
        """Test trial batching."""
        chunks = WalkConfig(n_trials=10, chunk_size=4).chunks()
        assert [list(c) for c in chunks] == [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9]]

    @pytest.mark.parametrize(
        "kwargs, message",
        [
            ({"n_steps": 0}, "n_steps must be at least 1"),
            ({"dt": 0.0}, "dt must be positive"),
            ({"n_trials": 0}, "n_trials must be at least 1"),
            ({"master_seed": -1}, "64 bits"),
            ({"step_std": -0.1}, "step_std must be non-negative"),
            ({"chunk_size": 0}, "chunk_size must be positive"),
            ({"workers": 0}, "workers must be positive"),
        ],
    )
    def test_validation(self, kwargs, message):
        """Test rejected parameters."""
        with pytest.raises(ValueError, match=message):
            WalkConfig(**kwargs)


class TestWalkRecord:
    """Tests for WalkRecord."""

    def test_distance_range(self):
        """Test that distances must lie in [0, pi/2]."""
        WalkRecord(trial=0, seed=1, distances=np.array([0.0, np.pi / 2]))
        with pytest.raises(ValueError, match=r"\[0, pi/2\]"):
            WalkRecord(trial=0, seed=1, distances=np.array([0.0, 1.6]))
        with pytest.raises(ValueError):
            WalkRecord(trial=0, seed=1, distances=np.array([-0.1]))


class TestWalkEnsemble:
    """Tests for WalkEnsemble."""

    def test_final_distances_and_record(self):
        """Test the per-trial view of an ensemble."""
        cfg = WalkConfig(n_steps=2, n_trials=2)
        ensemble = WalkEnsemble(
            config=cfg,
            distances=np.array([[0.0, 0.1, 0.2], [0.0, 0.3, 0.4]]),
            seeds=np.array([5, 6], dtype=np.uint64),
            displacements=np.zeros((2, 3, 1)),
        )
        assert ensemble.final_distances.tolist() == [0.2, 0.4]
        record = ensemble.record(1)
        assert record.trial == 1
        assert record.seed == 6
        assert record.distances.tolist() == [0.0, 0.3, 0.4]
        assert record.final_state is None
        assert record.displacement.tolist() == [0.0]
