# tests/test_macro.py
"""Tests for macroscopic freezing estimates."""

import math

import pytest
from pydantic import ValidationError

from statelab.macro import (
    MacroScenario,
    Quantity,
    Unit,
    displacement_rms,
    freezing_report,
    freezing_sweep,
    fs_angle_asymptote,
    fs_angle_of_displacement,
    order_of_magnitude,
    reference_chain,
    stokes_einstein,
)


class TestQuantity:
    """Tests for Quantity."""

    def test_str(self):
        """Test the printed form."""
        assert str(Quantity.of(1e-3, Unit.METER)) == "0.001 m"

    def test_frozen(self):
        """Test immutability."""
        quantity = Quantity.of(1.0, Unit.SECOND)
        with pytest.raises(ValidationError):
            quantity.value = 2.0


class TestMacroScenario:
    """Tests for MacroScenario."""

    def test_defaults(self):
        """Test the 1 mm sphere in air."""
        s = MacroScenario()
        assert s.radius == Quantity.of(1e-3, Unit.METER)
        assert s.temperature.value == 293.0
        assert s.observation_time.unit is Unit.SECOND

    def test_plain_numbers_are_tagged(self):
        """Test that plain numbers take the field's unit."""
        s = MacroScenario(radius=2e-3, viscosity=1e-5)
        assert s.radius == Quantity.of(2e-3, Unit.METER)
        assert s.viscosity.unit is Unit.PASCAL_SECOND

    def test_wrong_unit_rejected(self):
        """Test that a quantity in another unit fails validation."""
        with pytest.raises(ValidationError, match="radius must be given in m"):
            MacroScenario(radius=Quantity.of(1.0, Unit.SECOND))

    def test_non_positive_rejected(self):
        """Test that non-positive values fail validation."""
        with pytest.raises(ValidationError, match="temperature must be positive"):
            MacroScenario(temperature=0.0)

    def test_with_radius_and_viscosity(self):
        """Test copies with one field replaced."""
        s = MacroScenario()
        assert s.with_radius(5e-4).radius.value == 5e-4
        assert s.with_viscosity(2e-5).viscosity.value == 2e-5
        assert s.radius.value == 1e-3

    def test_as_si(self):
        """Test the plain SI mapping."""
        si = MacroScenario().as_si()
        assert set(si) == set(MacroScenario.UNITS)
        assert si["wavelength"] == 1e-5


class TestChain:
    """Tests for the individual steps of the freezing chain."""

    def test_stokes_einstein(self):
        """Test D = k_B T / (6 pi eta r) for the default sphere."""
        assert stokes_einstein(MacroScenario()) == pytest.approx(1.19e-14, rel=0.01)

    def test_stokes_einstein_scales_inversely(self):
        """Test D proportional to 1 / r."""
        s = MacroScenario()
        assert stokes_einstein(s.with_radius(2e-3)) == pytest.approx(stokes_einstein(s) / 2)

    def test_displacement_rms(self):
        """Test sqrt(2 D t)."""
        assert displacement_rms(1e-12, 1e-13) == pytest.approx(math.sqrt(2e-25))
        with pytest.raises(ValueError, match="non-negative"):
            displacement_rms(-1.0, 1.0)

    def test_angle_moderate(self):
        """Test arccos(exp(-delta^2 / 8 sigma^2)) away from zero."""
        assert fs_angle_of_displacement(2.0, 1.0) == pytest.approx(math.acos(math.exp(-0.5)))

    def test_angle_tiny_keeps_precision(self):
        """Test that tiny displacements match the asymptote to full precision."""
        angle = fs_angle_of_displacement(1e-13, 1e-5)
        assert angle == pytest.approx(fs_angle_asymptote(1e-13, 1e-5), rel=1e-12)
        assert angle == pytest.approx(5e-9, rel=1e-12)

    def test_angle_sigma_positive(self):
        """Test that sigma must be positive."""
        with pytest.raises(ValueError, match="sigma must be positive"):
            fs_angle_of_displacement(1.0, 0.0)
        with pytest.raises(ValueError, match="sigma must be positive"):
            fs_angle_asymptote(1.0, -1.0)

    def test_order_of_magnitude(self):
        """Test rounding to the nearest power of ten in log scale."""
        assert order_of_magnitude(4.47e-13) == pytest.approx(1e-12)
        assert order_of_magnitude(3e-13) == pytest.approx(1e-13)
        with pytest.raises(ValueError, match="must be positive"):
            order_of_magnitude(0.0)

    def test_reference_chain(self):
        """Test the chain from D = 1e-12 m^2/s over 1e-13 s."""
        chain = reference_chain(1e-13, 1e-5)
        assert chain["displacement"] == pytest.approx(4.47e-13, rel=1e-3)
        assert chain["displacement_order"] == pytest.approx(1e-12)
        assert chain["angle_at_order"] == pytest.approx(5e-8, rel=1e-9)
        assert chain["displacement_in_bracket"]
        assert chain["angle_within_factor_3"]


class TestFreezingReport:
    """Tests for freezing_report."""

    def test_default_scenario_is_frozen(self):
        """Test the verdict and the default threshold."""
        report = freezing_report(MacroScenario())
        assert report.frozen
        assert report.verdict == "frozen"
        assert report.displacement == pytest.approx(4.88e-14, rel=0.01)
        assert report.angle == pytest.approx(2.44e-9, rel=0.01)
        assert report.threshold == pytest.approx(0.4895, abs=1e-4)
        assert report.angle == pytest.approx(report.angle_asymptote, rel=1e-9)

    def test_viscosity_comparison_and_note(self):
        """Test that both viscosities and the quoted chain are reported."""
        report = freezing_report(MacroScenario())
        comparison = report.viscosity_comparison
        assert comparison["tabulated_viscosity"] == 1e-5
        assert comparison["tabulated"] == pytest.approx(comparison["configured"] * 1.8)
        assert report.chain["diffusion"] == 1e-12
        assert "both chains are reported" in report.note

    def test_explicit_threshold(self):
        """Test that a tiny threshold makes the sphere resolvable."""
        report = freezing_report(MacroScenario(), threshold=1e-12)
        assert report.verdict == "resolvable"
        with pytest.raises(ValueError, match="threshold must be positive"):
            freezing_report(MacroScenario(), threshold=0.0)

    def test_to_dict_and_summary(self):
        """Test serialization and summary text."""
        report = freezing_report(MacroScenario())
        data = report.to_dict()
        assert data["verdict"] == "frozen"
        assert data["scenario"]["radius"] == 1e-3
        text = report.summary()
        assert "Stokes-Einstein" in text
        assert "-> frozen" in text


class TestFreezingSweep:
    """Tests for freezing_sweep."""

    def test_sorted_rows(self):
        """Test one row per radius, sorted."""
        table = freezing_sweep(MacroScenario(), [1e-3, 1e-6, 1e-4])
        assert table["radius"].tolist() == [1e-6, 1e-4, 1e-3]
        assert list(table.columns) == ["radius", "diffusion", "displacement", "angle", "verdict"]
        assert table["angle"].is_monotonic_decreasing
        assert set(table["verdict"]) == {"frozen"}

    def test_threshold_applies(self):
        """Test the verdict with an explicit threshold."""
        table = freezing_sweep(MacroScenario(), [1e-3], threshold=1e-12)
        assert table["verdict"].tolist() == ["resolvable"]
