"""
Statistical reports used for acceptance decisions.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["SCHEMA_VERSION", "StatsReport", "describe"]

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np
import scipy.stats

from ..errors import InsufficientSamplesError

SCHEMA_VERSION = "1.0"
"""Version of the JSON layout of serialized reports."""

DEFAULT_BINS = 50
"""Histogram bins of a report."""


@dataclass(frozen=True)
class StatsReport:
    """
    Moments, test statistic, p-value and histogram of a sample set.

    The verdict is True when the null hypothesis is retained at ``alpha``.
    """

    test: str
    """Name of the test that produced the report."""

    sample_count: int
    """Number of samples."""

    mean: float
    """Sample mean."""

    variance: float
    """Sample variance (ddof = 1)."""

    skewness: float
    """Sample skewness (zero for a degenerate sample)."""

    excess_kurtosis: float
    """Sample excess kurtosis (zero for a degenerate sample)."""

    ks_statistic: float
    """Kolmogorov-Smirnov statistic."""

    p_value: float
    """p-value of the test."""

    histogram_edges: List[float]
    """Histogram bin edges."""

    histogram_counts: List[int]
    """Histogram counts, summing to sample_count."""

    verdict: bool
    """Whether the null hypothesis is retained."""

    alpha: float = 0.01
    """Significance level the verdict was taken at."""

    degenerate: bool = False
    """Set when the samples are constant."""

    details: Dict[str, Any] = field(default_factory=dict)
    """Test-specific extras (pairwise results, corrected alpha, ...)."""

    def __post_init__(self) -> None:
        if not 0.0 <= self.p_value <= 1.0:
            raise ValueError(f"p_value must lie in [0, 1], got {self.p_value}")
        if sum(self.histogram_counts) != self.sample_count:
            raise ValueError("histogram counts must sum to sample_count")

    def to_dict(self) -> Dict[str, Any]:
        """Plain mapping with a schema version, ready for JSON."""
        return {
            "schema_version": SCHEMA_VERSION,
            "test": self.test,
            "sample_count": self.sample_count,
            "mean": self.mean,
            "variance": self.variance,
            "skewness": self.skewness,
            "excess_kurtosis": self.excess_kurtosis,
            "ks_statistic": self.ks_statistic,
            "p_value": self.p_value,
            "histogram": {"edges": self.histogram_edges, "counts": self.histogram_counts},
            "verdict": "pass" if self.verdict else "fail",
            "alpha": self.alpha,
            "degenerate": self.degenerate,
            "details": self.details,
        }

    def to_json(self) -> str:
        """Deterministic JSON text (sorted keys)."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=_jsonable)

    def summary(self) -> str:
        """
        Generate a human-readable summary of the report.

        Returns:
            Formatted string with the key statistics
        """
        return (
            f"{self.test}:\n"
            f"  Samples: {self.sample_count}\n"
            f"  Mean: {self.mean:.6g}  Variance: {self.variance:.6g}\n"
            f"  Skewness: {self.skewness:.4f}  Excess kurtosis: {self.excess_kurtosis:.4f}\n"
            f"  KS statistic: {self.ks_statistic:.6f}  p-value: {self.p_value:.4g}\n"
            f"  Verdict at alpha={self.alpha}: {'pass' if self.verdict else 'fail'}"
        )


def _jsonable(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"cannot serialize {type(value).__name__}")


def describe(samples: np.ndarray, min_samples: int = 2, bins: int = DEFAULT_BINS) -> Dict[str, Any]:
    """
    Moments and histogram of a one-dimensional sample set.

    Args:
        samples: Samples
        min_samples: Minimum accepted sample count
        bins: Histogram bins

    Returns:
        Mapping with sample_count, mean, variance, skewness,
        excess_kurtosis, histogram_edges, histogram_counts, degenerate

    Raises:
        InsufficientSamplesError: If fewer than ``min_samples`` samples are given
        ValueError: If samples are not finite
    """
    x = np.asarray(samples, dtype=float).ravel()
    if x.size < min_samples:
        raise InsufficientSamplesError(f"need at least {min_samples} samples, got {x.size}")
    if not np.all(np.isfinite(x)):
        raise ValueError("samples must be finite")
    degenerate = bool(np.ptp(x) == 0.0)
    counts, edges = np.histogram(x, bins=bins)
    return {
        "sample_count": int(x.size),
        "mean": float(np.mean(x)),
        "variance": float(np.var(x, ddof=1)),
        "skewness": 0.0 if degenerate else float(scipy.stats.skew(x)),
        "excess_kurtosis": 0.0 if degenerate else float(scipy.stats.kurtosis(x)),
        "histogram_edges": edges.tolist(),
        "histogram_counts": counts.astype(int).tolist(),
        "degenerate": degenerate,
    }
