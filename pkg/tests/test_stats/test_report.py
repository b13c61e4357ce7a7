# tests/test_stats/test_report.py
"""Tests for statistical reports."""

import json

import numpy as np
import pytest

from statelab.errors import InsufficientSamplesError
from statelab.stats.report import SCHEMA_VERSION, StatsReport, describe


def _report(**overrides):
    values = dict(
        test="normality",
        sample_count=3,
        mean=0.0,
        variance=1.0,
        skewness=0.0,
        excess_kurtosis=0.0,
        ks_statistic=0.1,
        p_value=0.5,
        histogram_edges=[0.0, 0.5, 1.0],
        histogram_counts=[1, 2],
        verdict=True,
    )
    values.update(overrides)
    return StatsReport(**values)


class TestDescribe:
    """Tests for describe."""

    def test_moments(self):
        """Test moments of a known sample."""
        info = describe(np.array([1.0, 2.0, 3.0, 4.0]), bins=4)
        assert info["sample_count"] == 4
        assert info["mean"] == 2.5
        assert info["variance"] == pytest.approx(5.0 / 3.0)
        assert info["skewness"] == pytest.approx(0.0)
        assert sum(info["histogram_counts"]) == 4
        assert len(info["histogram_edges"]) == 5
        assert info["degenerate"] is False

    def test_degenerate(self):
        """Test constant samples."""
        info = describe(np.full(10, 2.0))
        assert info["degenerate"] is True
        assert info["variance"] == 0.0
        assert info["skewness"] == 0.0

    def test_too_few_samples(self):
        """Test the sample count check."""
        with pytest.raises(InsufficientSamplesError, match="at least 5"):
            describe(np.zeros(4), min_samples=5)

    def test_non_finite(self):
        """Test that NaN and inf are rejected."""
        with pytest.raises(ValueError, match="finite"):
            describe(np.array([0.0, np.inf, 1.0]))


class TestStatsReport:
    """Tests for StatsReport."""

    def test_p_value_range(self):
        """Test that the p-value must lie in [0, 1]."""
        with pytest.raises(ValueError, match="p_value"):
            _report(p_value=1.5)

    def test_counts_must_sum(self):
        """Test the histogram consistency check."""
        with pytest.raises(ValueError, match="sum to sample_count"):
            _report(histogram_counts=[1, 1])

    def test_to_dict(self):
        """Test the serialized layout."""
        data = _report(verdict=False).to_dict()
        assert data["schema_version"] == SCHEMA_VERSION
        assert data["verdict"] == "fail"
        assert data["histogram"] == {"edges": [0.0, 0.5, 1.0], "counts": [1, 2]}

    def test_to_json_sorted_and_numpy_safe(self):
        """Test deterministic JSON with numpy values in details."""
        report = _report(details={"z": np.float64(1.5), "a": np.arange(2)})
        text = report.to_json()
        assert text == _report(details={"z": np.float64(1.5), "a": np.arange(2)}).to_json()
        data = json.loads(text)
        assert data["details"] == {"a": [0, 1], "z": 1.5}
        assert list(data) == sorted(data)

    def test_summary(self):
        """Test the human-readable summary."""
        text = _report().summary()
        assert text.startswith("normality:")
        assert "Samples: 3" in text
        assert "Verdict at alpha=0.01: pass" in text
