# tests/test_config.py
"""Tests for configuration loading and validation."""

import json
import math
from pathlib import Path

import pandas as pd
import pytest
from pydantic import ValidationError

from statelab.config import (
    OUTPUT_ROOT_ENV,
    Diagnostic,
    ExperimentConfig,
    ExperimentName,
    GridConfig,
    HamiltonianConfig,
    MacroConfig,
    PotentialKind,
    UnitsMode,
    default_output_root,
    load_config,
    load_preset,
    validate,
    validate_file,
)
from statelab.errors import ConfigError
from statelab.grid.potentials import HarmonicPotential, LinearPotential, TabulatedPotential


def _write(tmp_path, text, name="run.toml"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


class TestPresets:
    """Tests for the shipped presets."""

    def test_default_preset(self):
        """Test the acceptance-size defaults."""
        config = load_config()
        assert config.seed == 0
        assert config.hamiltonian.potential == PotentialKind.HARMONIC
        assert config.grid.points_per_axis == 512
        assert config.stats.born_trials == 100_000

    def test_quick_preset(self):
        """Test the reduced smoke-run sizes."""
        config = load_config(preset="quick")
        assert config.walk.n_trials == 1000
        assert config.walk.gue_dim == 32

    def test_macro_preset(self):
        """Test the 1 mm sphere preset in SI units."""
        config = load_config(preset="paper-1mm")
        assert config.units == UnitsMode.SI
        assert config.macro.viscosity == 1e-5
        assert config.macro.tabulated_viscosity == 1.8e-5

    def test_unknown_preset(self):
        """Test that an unknown preset name is rejected."""
        with pytest.raises(ConfigError, match="unknown preset"):
            load_preset("huge")


class TestLoadConfig:
    """Tests for load_config."""

    def test_file_merged_over_preset(self, tmp_path):
        """Test that file keys replace preset keys one by one."""
        path = _write(tmp_path, "[walk]\nn_trials = 2000\n")
        config = load_config(path, preset="quick")
        assert config.walk.n_trials == 2000
        assert config.walk.gue_dim == 32

    def test_overrides_win(self, tmp_path):
        """Test that command-line overrides are applied last."""
        path = _write(tmp_path, "master_seed = 5\n")
        config = load_config(
            path, preset="quick", overrides={"master_seed": 9, "experiment": "gue-walk"}
        )
        assert config.seed == 9
        assert config.experiment == ExperimentName.GUE_WALK

    def test_none_overrides_ignored(self):
        """Test that unset overrides keep the preset value."""
        config = load_config(preset="quick", overrides={"master_seed": None, "output_dir": None})
        assert config.seed == 0
        assert config.output_dir is None

    def test_schema_error_has_line(self, tmp_path):
        """Test that schema diagnostics point at the offending line."""
        path = _write(tmp_path, "master_seed = 1\n\n[walk]\nn_steps = -3\n")
        with pytest.raises(ConfigError) as info:
            load_config(path, preset=None)
        assert len(info.value.diagnostics) == 1
        assert info.value.diagnostics[0].startswith(f"{path}:4: error: walk.n_steps")

    def test_extra_key_forbidden(self, tmp_path):
        """Test that unknown keys are rejected."""
        path = _write(tmp_path, "master_seed = 1\n[grid]\ncolour = 1\n")
        with pytest.raises(ConfigError) as info:
            load_config(path, preset=None)
        assert f"{path}:3" in info.value.diagnostics[0]
        assert "grid.colour" in info.value.diagnostics[0]

    def test_invalid_toml(self, tmp_path):
        """Test that a TOML syntax error is reported."""
        path = _write(tmp_path, "master_seed = = 1\n")
        with pytest.raises(ConfigError) as info:
            load_config(path)
        assert "invalid TOML" in info.value.diagnostics[0]

    def test_missing_seed(self):
        """Test that a configuration without a seed does not load."""
        with pytest.raises(ConfigError) as info:
            load_config(preset=None)
        assert any(d.startswith("master_seed: error: missing seed") for d in info.value.diagnostics)


class TestValidate:
    """Tests for validate."""

    def test_clean_configuration(self):
        """Test that the defaults with a seed produce no diagnostics."""
        assert validate(ExperimentConfig(master_seed=1)) == []

    def test_margin_error(self):
        """Test a packet too close to the grid boundary."""
        config = ExperimentConfig.model_validate(
            {"master_seed": 1, "packet": {"center": [15.0], "momentum": [0.0]}}
        )
        problems = validate(config)
        assert [d.location for d in problems] == ["grid.extent"]
        assert "use extent >=" in problems[0].message

    def test_dimension_mismatch(self):
        """Test vectors whose length differs from the grid dimension."""
        config = ExperimentConfig.model_validate(
            {"master_seed": 1, "experiment": "decompose", "grid": {"dim": 2, "points_per_axis": 32}}
        )
        locations = [d.location for d in validate(config)]
        assert "packet.center" in locations
        assert "packet.momentum" in locations

    def test_large_dt_warns(self):
        """Test that a coarse split-step is a warning, not an error."""
        config = ExperimentConfig.model_validate({"master_seed": 1, "hamiltonian": {"dt": 0.5}})
        problems = validate(config)
        assert [(d.level, d.location) for d in problems] == [("warning", "hamiltonian.dt")]

    def test_tabulated_without_file(self):
        """Test that the tabulated potential needs a samples file."""
        config = ExperimentConfig.model_validate(
            {"master_seed": 1, "hamiltonian": {"potential": "tabulated"}}
        )
        assert [d.location for d in validate(config)] == ["hamiltonian.potential_file"]

    def test_tabulated_file_checked(self, tmp_path):
        """Test that a samples file of the wrong length is reported."""
        path = tmp_path / "v.csv"
        pd.DataFrame({"V": [0.0, 1.0, 2.0]}).to_csv(path, index=False)
        config = ExperimentConfig.model_validate(
            {"master_seed": 1, "hamiltonian": {"potential": "tabulated", "potential_file": str(path)}}
        )
        problems = validate(config)
        assert [d.location for d in problems] == ["hamiltonian.potential_file"]
        assert "3 samples" in problems[0].message

    def test_few_trials(self):
        """Test the trial-count checks of the constrained walk."""
        few = ExperimentConfig.model_validate(
            {"master_seed": 1, "experiment": "constrained-walk", "walk": {"n_trials": 50}}
        )
        some = ExperimentConfig.model_validate(
            {"master_seed": 1, "experiment": "constrained-walk", "walk": {"n_trials": 500}}
        )
        assert [d.level for d in validate(few)] == ["error"]
        assert [d.level for d in validate(some)] == ["warning"]

    def test_checks_follow_experiment(self):
        """Test that walk checks are skipped for unrelated experiments."""
        config = ExperimentConfig.model_validate(
            {"master_seed": 1, "experiment": "verify-metric", "walk": {"n_trials": 50}}
        )
        assert validate(config) == []

    def test_si_units_rejected_for_quantum_experiments(self):
        """Test that SI units are limited to the macro estimate."""
        config = ExperimentConfig.model_validate(
            {"master_seed": 1, "experiment": "decompose", "units": "si"}
        )
        problems = validate(config)
        assert [(d.level, d.location) for d in problems] == [("error", "units")]
        macro = ExperimentConfig.model_validate(
            {"master_seed": 1, "experiment": "macro-estimate", "units": "si"}
        )
        assert validate(macro) == []


class TestValidateFile:
    """Tests for validate_file."""

    def test_valid_file(self, tmp_path):
        """Test a seeded file that validates on its own."""
        assert validate_file(_write(tmp_path, "master_seed = 3\n")) == []

    def test_missing_seed_located(self, tmp_path):
        """Test that a missing seed is reported against the file."""
        path = _write(tmp_path, "[grid]\ndim = 1\n")
        problems = validate_file(path)
        assert len(problems) == 1
        assert problems[0].location == f"{path}:master_seed"

    def test_semantic_problem_gets_line(self, tmp_path):
        """Test that validate diagnostics are mapped to file lines."""
        path = _write(tmp_path, "master_seed = 3\n\n[hamiltonian]\ndt = 0.5\n")
        problems = validate_file(path)
        assert [str(d) for d in problems][0].startswith(f"{path}:4: warning:")

    def test_never_raises(self, tmp_path):
        """Test unreadable and malformed files."""
        missing = validate_file(tmp_path / "absent.toml")
        assert missing[0].message.startswith("cannot read file")
        broken = validate_file(_write(tmp_path, "[walk\n"))
        assert "invalid TOML" in broken[0].message


class TestSections:
    """Tests for the configuration sections."""

    def test_seed_required(self):
        """Test that reading a missing seed raises."""
        with pytest.raises(ConfigError, match="master_seed is required"):
            ExperimentConfig().seed

    def test_frozen(self):
        """Test that configurations are immutable."""
        config = ExperimentConfig(master_seed=1)
        with pytest.raises(ValidationError):
            config.master_seed = 2

    def test_snapshot_is_json(self):
        """Test the JSON-ready dump."""
        snapshot = ExperimentConfig(master_seed=1).snapshot()
        assert snapshot["experiment"] == "all"
        assert snapshot["hamiltonian"]["potential"] == "free"
        json.dumps(snapshot)

    def test_grid_extent_default(self):
        """Test the 40 sigma default extent."""
        assert GridConfig().spec(2.0).extent == 80.0
        assert GridConfig(extent=10.0).spec(2.0).extent == 10.0

    def test_hamiltonian_spec(self):
        """Test potential selection."""
        config = HamiltonianConfig(potential="harmonic", stiffness=4.0, force=[0.5])
        assert isinstance(config.spec().potential, HarmonicPotential)
        assert isinstance(config.spec(PotentialKind.LINEAR).potential, LinearPotential)

    def test_tabulated_spec(self, tmp_path):
        """Test loading the tabulated potential for a grid."""
        grid = GridConfig(points_per_axis=64).spec(1.0)
        path = tmp_path / "v.csv"
        pd.DataFrame({"V": 0.5 * grid.axis**2}).to_csv(path, index=False)
        config = HamiltonianConfig(potential="tabulated", potential_file=path)
        potential = config.spec(grid=grid).potential
        assert isinstance(potential, TabulatedPotential)
        assert potential.value_at([grid.axis[40]]) == pytest.approx(0.5 * grid.axis[40] ** 2)
        with pytest.raises(ConfigError, match="potential_file and a grid"):
            config.spec()

    def test_comparison_horizon(self):
        """Test one oscillation period for harmonic potentials, 10 otherwise."""
        assert HamiltonianConfig(potential="harmonic", stiffness=4.0).comparison_horizon() == (
            pytest.approx(math.pi)
        )
        assert HamiltonianConfig().comparison_horizon() == 10.0
        assert HamiltonianConfig(horizon=2.5).comparison_horizon() == 2.5

    def test_macro_sweep(self):
        """Test the sweep radii and their ordering check."""
        radii = MacroConfig(sweep_points=3, sweep_min_radius=1e-6, sweep_max_radius=1e-2).sweep_radii()
        assert radii.tolist() == pytest.approx([1e-6, 1e-4, 1e-2])
        with pytest.raises(ValidationError, match="sweep_max_radius must exceed"):
            MacroConfig(sweep_min_radius=1e-3, sweep_max_radius=1e-4)

    def test_macro_scenario(self):
        """Test the scenario built from the section."""
        assert MacroConfig(radius=2e-3).scenario().radius.value == 2e-3


class TestDiagnostic:
    """Tests for Diagnostic."""

    def test_str(self):
        """Test the compiler-style form."""
        assert str(Diagnostic("error", "run.toml:3", "bad")) == "run.toml:3: error: bad"


class TestOutputRoot:
    """Tests for default_output_root."""

    def test_environment(self, monkeypatch, tmp_path):
        """Test the environment override."""
        monkeypatch.setenv(OUTPUT_ROOT_ENV, str(tmp_path))
        assert default_output_root() == tmp_path

    def test_fallback(self, monkeypatch):
        """Test the ./runs fallback."""
        monkeypatch.delenv(OUTPUT_ROOT_ENV, raising=False)
        assert default_output_root() == Path("runs")
