# tests/test_interfaces.py
"""Tests for the interfaces module."""

import numpy as np

from statelab.experiments import EXPERIMENTS
from statelab.grid.potentials import (
    FreePotential,
    HarmonicPotential,
    LinearPotential,
    TabulatedPotential,
)
from statelab.interfaces import Experiment, Potential
from statelab.types import GridSpec

from .conftest import MockExperiment


class TestPotential:
    """Tests for Potential protocol."""

    def test_protocol_methods(self):
        """Test that Potential requires degree, values, value_at and gradient."""
        members = dir(Potential)
        for name in ("degree", "values", "value_at", "gradient"):
            assert name in members

    def test_builtin_potentials_implement_protocol(self):
        """Test the shipped potentials against the protocol."""
        grid = GridSpec(points_per_axis=16, extent=8.0)
        potentials = [
            FreePotential(),
            LinearPotential(1.0),
            HarmonicPotential(2.0),
            TabulatedPotential(np.zeros(grid.shape), grid),
        ]
        assert all(isinstance(p, Potential) for p in potentials)

    def test_object_without_gradient_is_not_a_potential(self):
        """Test that an incomplete object fails the runtime check."""

        class Incomplete:
            degree = 0

            def values(self, grid):
                return np.zeros(grid.shape)

        assert not isinstance(Incomplete(), Potential)


class TestExperiment:
    """Tests for Experiment protocol."""

    def test_mock_experiment_implements_protocol(self):
        """Test that MockExperiment satisfies the protocol."""
        assert isinstance(MockExperiment(), Experiment)

    def test_named_experiments_implement_protocol(self):
        """Test every registered experiment class."""
        for name, cls in EXPERIMENTS.items():
            experiment = cls()
            assert isinstance(experiment, Experiment)
            assert experiment.name == name.value

    def test_object_without_run_is_not_an_experiment(self):
        """Test that a name alone is not enough."""

        class NameOnly:
            name = "x"

        assert not isinstance(NameOnly(), Experiment)
