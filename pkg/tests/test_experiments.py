# tests/test_experiments.py
"""Tests for the named experiments on a reduced configuration."""

import numpy as np
import pandas as pd
import pytest

from statelab.config import ExperimentName, HamiltonianConfig
from statelab.experiment import undocumented_columns
from statelab.experiments import (
    EXPERIMENTS,
    AllExperiment,
    BornCheckExperiment,
    ClassicalCompareExperiment,
    ConstrainedWalkExperiment,
    DecomposeExperiment,
    EhrenfestExperiment,
    GUEWalkExperiment,
    MacroEstimateExperiment,
    VerifyMetricExperiment,
    get_experiment,
)
from statelab.experiments.base import AUXILIARY_KEY, seed_record, sub_seed
from statelab.experiments.born import typical_distance
from statelab.interfaces import Experiment
from statelab.logger import PlainLogger
from statelab.stats.report import StatsReport
from statelab.types import SimulationEvent
from statelab.walks.config import trial_seed


def _criteria(result):
    return {c.name: c for c in result.criteria}


class TestRegistry:
    """Tests for the experiment registry."""

    def test_every_name_registered(self):
        """Test that each experiment name maps to a class with that name."""
        assert list(EXPERIMENTS) == list(ExperimentName)
        for name, cls in EXPERIMENTS.items():
            assert cls.name == name.value
            assert isinstance(cls(), Experiment)

    def test_get_experiment(self):
        """Test lookup by command-line name."""
        assert isinstance(get_experiment("born-check"), BornCheckExperiment)
        with pytest.raises(ValueError):
            get_experiment("teleport")


class TestSeeds:
    """Tests for the seed helpers."""

    def test_sub_seed_uses_auxiliary_keys(self):
        """Test that sub-seeds never collide with trial seeds."""
        assert sub_seed(5, 0) == trial_seed(5, AUXILIARY_KEY)
        assert sub_seed(5, 0) != sub_seed(5, 1)

    def test_seed_record(self):
        """Test the manifest entry of an ensemble."""
        record = seed_record(9, 3)
        assert record["master_seed"] == 9
        assert record["n_trials"] == 3
        assert record["first_trial_seeds"] == [trial_seed(9, t) for t in range(3)]


class TestVerifyMetricExperiment:
    """Tests for VerifyMetricExperiment."""

    def test_identities_hold(self, small_config):
        """Test the residual tables and criteria."""
        result = VerifyMetricExperiment().run(small_config)
        assert result.passed
        assert len(result.tables["metric_identity"]) == 17
        assert len(result.tables["phase_space_identity"]) == 25
        shifted = result.tables["shifted_operators"].set_index("sign")
        assert shifted.loc[-1, "momentum_residual"] > 0.5
        gram = result.reports["gram"]
        assert gram["min_singular_value_grid"] == pytest.approx(
            gram["min_singular_value_closed_form"], abs=1e-8
        )
        assert undocumented_columns(result.name, result.tables) == []


class TestDeterministicDynamics:
    """Tests for the decompose, ehrenfest and classical-compare experiments."""

    def test_decompose(self, small_config):
        """Test one row per potential and lattice point."""
        result = DecomposeExperiment().run(small_config)
        table = result.tables["decomposition"]
        assert len(table) == 27
        assert set(table["potential"]) == {"free", "linear", "harmonic"}
        assert set(_criteria(result)) == {"decomposition_residual", "decomposition_components"}
        assert result.passed
        assert undocumented_columns(result.name, result.tables) == []

    def test_ehrenfest(self, small_config):
        """Test the commutator and projection table."""
        result = EhrenfestExperiment().run(small_config)
        table = result.tables["ehrenfest"]
        assert len(table) == 27
        free = table[table["potential"] == "free"]
        assert np.allclose(free["force_oracle"], 0.0)
        assert result.passed
        assert undocumented_columns(result.name, result.tables) == []

    def test_classical_compare(self, small_config):
        """Test one harmonic period against the Newtonian trajectory."""
        logger = PlainLogger()
        result = ClassicalCompareExperiment().run(small_config, logger)
        table = result.tables["trajectories"]
        assert 2.0 * np.pi <= table["t"].iloc[-1] < 2.0 * np.pi + 0.01
        assert {"x0_quantum", "x0_classical", "p0_quantum", "p0_classical"} <= set(table.columns)
        comparison = result.reports["comparison"]
        assert comparison["max_position_deviation"] < comparison["tolerance"]
        assert result.passed
        assert len(logger.events(SimulationEvent.CHECK_PASSED)) == 1
        assert undocumented_columns(result.name, result.tables) == []

    def test_classical_compare_tabulated(self, small_config, tmp_path):
        """Test the comparison with a potential loaded from a samples file."""
        grid = small_config.grid.spec(small_config.packet.sigma)
        path = tmp_path / "harmonic.csv"
        pd.DataFrame({"V": 0.5 * grid.axis**2}).to_csv(path, index=False)
        config = small_config.model_copy(
            update={
                "hamiltonian": HamiltonianConfig(
                    potential="tabulated", potential_file=path, horizon=1.0
                )
            }
        )
        result = ClassicalCompareExperiment().run(config)
        table = result.tables["trajectories"]
        assert table["t"].iloc[-1] == pytest.approx(1.0)
        assert result.reports["comparison"]["potential"].startswith("TabulatedPotential")
        assert np.isfinite(result.reports["comparison"]["max_position_deviation"])
        assert undocumented_columns(result.name, result.tables) == []


class TestWalkExperiments:
    """Tests for the gue-walk and constrained-walk experiments."""

    def test_gue_walk_structure(self, small_config):
        """Test reports, tables and seed records of the GUE experiment."""
        result = GUEWalkExperiment().run(small_config)
        for key in ("packet_components_normality", "isotropy", "homogeneity",
                    "dense_components_normality"):
            assert isinstance(result.reports[key], StatsReport)
        assert result.reports["isotropy"].details["labels"] == ["base0_dir0", "base0_dir1"]
        assert len(result.reports["homogeneity"].details["labels"]) == 4
        assert set(result.seeds) == {
            "packet_components", "base0_components", "base1_components", "trajectories"
        }
        assert set(result.tables["trajectories"]["trial"]) == set(range(5))
        assert _criteria(result)["norm_preservation"].passed
        assert undocumented_columns(result.name, result.tables) == []

    def test_gue_walk_reproducible(self, small_config):
        """Test that the same seed gives the same tables."""
        first = GUEWalkExperiment().run(small_config)
        second = GUEWalkExperiment().run(small_config)
        for key in first.tables:
            pd.testing.assert_frame_equal(first.tables[key], second.tables[key])

    def test_constrained_walk(self, small_config):
        """Test translation and distance identities of the packet walks."""
        result = ConstrainedWalkExperiment().run(small_config)
        criteria = _criteria(result)
        assert criteria["translation"].passed
        assert criteria["distance_identity"].passed
        assert set(criteria) == {
            "displacement_normality", "final_variance", "diffusion_coefficient",
            "translation", "distance_identity",
        }
        assert result.reports["diffusion"]["expected_final_variance"] == pytest.approx(0.2)
        assert len(result.tables["variance"]) == 20
        assert result.seeds["walks"]["n_trials"] == 400
        assert undocumented_columns(result.name, result.tables) == []


class TestBornCheckExperiment:
    """Tests for BornCheckExperiment."""

    def test_typical_distance(self):
        """Test sqrt(n (N - 1)) dt s / hbar."""
        assert typical_distance(5, 64, 0.01) == pytest.approx(np.sqrt(315.0) * 0.01)

    def test_tables(self, small_config):
        """Test the curve, sensitivity, pair and manifold tables."""
        result = BornCheckExperiment().run(small_config)
        delta = typical_distance(3, 16, 0.01)
        assert result.metadata["typical_distance"] == pytest.approx(delta)
        assert result.metadata["epsilon"] == pytest.approx(1.5 * delta)
        assert len(result.tables["born_curve"]) == 6
        assert len(result.tables["epsilon_sensitivity"]) == 24
        assert len(result.tables["pairs"]) == 3
        assert result.tables["born_curve"]["trials"].eq(2000).all()
        criteria = _criteria(result)
        assert criteria["manifold_closed_form"].passed
        assert criteria["manifold_grid"].passed
        assert undocumented_columns(result.name, result.tables) == []


class TestMacroEstimateExperiment:
    """Tests for MacroEstimateExperiment."""

    def test_all_criteria_hold(self, small_config):
        """Test the freezing chain, sweep and product-state checks."""
        result = MacroEstimateExperiment().run(small_config)
        assert result.passed
        assert len(result.tables["sweep"]) == 5
        assert result.reports["freezing_report"]["verdict"] == "frozen"
        product = result.reports["product_state"]
        assert product["particle_dim"] == 4
        assert product["steps"] == 5
        assert product["final_particle_distance"] > 0.0
        assert result.seeds["product_walk"]["n_trials"] == 1
        assert undocumented_columns(result.name, result.tables) == []


class TestAllExperiment:
    """Tests for AllExperiment."""

    def test_collects_every_experiment(self, small_config):
        """Test prefixed outputs and one metadata entry per experiment."""
        logger = PlainLogger()
        result = AllExperiment().run(small_config, logger)
        names = [n.value for n in ExperimentName if n != ExperimentName.ALL]
        assert list(result.metadata) == names
        assert all(":" in c.name for c in result.criteria)
        assert {key.split("/")[0] for key in result.tables} == set(names)
        assert len(logger.events(SimulationEvent.TRIAL_FINISHED)) >= len(names)
        assert undocumented_columns(result.name, result.tables) == []
