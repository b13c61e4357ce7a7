# tests/conftest.py
"""Common fixtures for testing the state-geometry experiments library."""

import time

import numpy as np
import pytest

from statelab.config import ExperimentConfig
from statelab.experiment import ExperimentResult
from statelab.logger import NullLogger
from statelab.types import (
    GridSpec,
    PacketParams,
    SimulationEvent,
    SimulationLog,
    SimulationLogger,
)


# ============= Test Data Fixtures =============


@pytest.fixture
def grid():
    """Provide a one-dimensional grid scaled to sigma = 1."""
    return GridSpec(dim=1, points_per_axis=256, extent=40.0)


@pytest.fixture
def fine_grid():
    """Provide the default N = 512, L = 40 sigma grid."""
    return GridSpec.for_packet(1.0)


@pytest.fixture
def rest_packet():
    """Provide a packet at rest at the origin."""
    return PacketParams(a=0.0, p=0.0, sigma=1.0)


@pytest.fixture
def moving_packet():
    """Provide a displaced packet with nonzero momentum."""
    return PacketParams(a=0.5, p=1.0, sigma=1.0)


@pytest.fixture
def unit_vector():
    """Provide a random unit vector of length 16."""
    rng = np.random.default_rng(7)
    v = rng.standard_normal(16) + 1j * rng.standard_normal(16)
    return v / np.linalg.norm(v)


@pytest.fixture
def sample_simulation_log():
    """Provide a sample simulation log entry."""
    return SimulationLog(
        timestamp=time.time(),
        event=SimulationEvent.STEP,
        source="SplitStepPropagator",
        data={"step": 1, "t": 0.01},
    )


@pytest.fixture
def small_config():
    """Provide a seeded configuration with reduced sample sizes."""
    return ExperimentConfig.model_validate(
        {
            "master_seed": 11,
            "grid": {"points_per_axis": 256},
            "packet": {"center": [0.0], "momentum": [1.0], "sigma": 1.0},
            "hamiltonian": {"potential": "harmonic", "force": [0.5]},
            "walk": {
                "n_steps": 20,
                "n_trials": 400,
                "gue_dim": 16,
                "chunk_size": 64,
                "dump_trials": 5,
            },
            "stats": {
                "n_resamples": 199,
                "component_samples": 1000,
                "component_grid_points": 64,
                "isotropy_directions": 2,
                "born_dim": 16,
                "born_trials": 2000,
                "born_steps": 3,
            },
            "macro": {"sweep_points": 5, "particle_dim": 4, "device_dim": 3, "product_steps": 5},
        }
    )


# ============= Mock Implementations =============


class MockExperiment:
    """Mock experiment with one table, one report and one criterion."""

    name = "verify-metric"

    def __init__(self, passed: bool = True):
        self.passed = passed

    def run(
        self, config: ExperimentConfig, logger: SimulationLogger = NullLogger()
    ) -> ExperimentResult:
        import pandas as pd

        from statelab.experiment import Criterion

        result = ExperimentResult(name=self.name)
        result.tables["metric_identity"] = pd.DataFrame(
            {"offset": [0.0, 1.0], "residual": [0.0, 1e-9]}
        )
        result.reports["gram"] = {"packets": 2, "min_singular_value_grid": 0.5}
        result.criteria.append(
            Criterion("metric_identity", 1e-9, 1e-6, self.passed, "mock criterion")
        )
        result.seeds["walks"] = {"master_seed": config.seed, "n_trials": 0}
        return result


@pytest.fixture
def mock_experiment():
    """Provide a passing mock experiment."""
    return MockExperiment()


@pytest.fixture
def failing_experiment():
    """Provide a mock experiment whose criterion fails."""
    return MockExperiment(passed=False)
