"""
Normality and isotropy tests on step-component and displacement samples.

Normality uses the one-sample Kolmogorov-Smirnov test. With known mean
and standard deviation the exact distribution is used; with parameters
estimated from the sample the statistic is calibrated by a parametric
Monte Carlo null (Lilliefors). Isotropy compares sample sets pairwise
with the two-sample test under a Bonferroni correction.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "DEFAULT_ALPHA",
    "lilliefors_statistic",
    "normality_test",
    "isotropy_test",
]

from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import scipy.stats

from ..errors import InsufficientSamplesError
from .report import StatsReport, describe

DEFAULT_ALPHA = 0.01
"""Significance level of every acceptance test."""

MIN_NORMALITY_SAMPLES = 100
"""Smallest sample accepted by :func:`normality_test`."""

MIN_ISOTROPY_SAMPLES = 1000
"""Smallest per-direction sample accepted by :func:`isotropy_test`."""


def lilliefors_statistic(x: np.ndarray, axis: int = -1) -> np.ndarray:
    """
    KS distance between the standardized sample and the standard normal.

    Args:
        x: Samples along ``axis``
        axis: Sample axis

    Returns:
        Statistic with ``axis`` removed
    """
    x = np.moveaxis(np.asarray(x, dtype=float), axis, -1)
    n = x.shape[-1]
    z = (x - x.mean(axis=-1, keepdims=True)) / x.std(axis=-1, ddof=1, keepdims=True)
    cdf = scipy.stats.norm.cdf(np.sort(z, axis=-1))
    ranks = np.arange(1, n + 1)
    upper = np.max(ranks / n - cdf, axis=-1)
    lower = np.max(cdf - (ranks - 1) / n, axis=-1)
    return np.maximum(upper, lower)


def normality_test(
    samples: np.ndarray,
    alpha: float = DEFAULT_ALPHA,
    mean: Optional[float] = None,
    std: Optional[float] = None,
    n_resamples: int = 1999,
    seed: int = 0,
) -> StatsReport:
    """
    Test samples for normality.

    Args:
        samples: At least 100 finite samples
        alpha: Significance level
        mean: Hypothesized mean; with ``std`` selects the exact KS test
        std: Hypothesized standard deviation
        n_resamples: Monte Carlo resamples for the fitted-parameter test
        seed: Seed of the Monte Carlo null

    Returns:
        StatsReport; constant samples give a degenerate, failing report

    Raises:
        InsufficientSamplesError: If fewer than 100 samples are given
    """
    info = describe(samples, min_samples=MIN_NORMALITY_SAMPLES)
    x = np.asarray(samples, dtype=float).ravel()
    details: Dict[str, Any] = {}
    if info["degenerate"]:
        statistic, p_value = 1.0, 0.0
        details["method"] = "degenerate"
    elif mean is not None and std is not None:
        result = scipy.stats.ks_1samp(x, scipy.stats.norm(loc=mean, scale=std).cdf)
        statistic, p_value = float(result.statistic), float(result.pvalue)
        details.update(method="ks_1samp", hypothesized_mean=mean, hypothesized_std=std)
    else:
        rng = np.random.default_rng(seed)
        result = scipy.stats.monte_carlo_test(
            x,
            rng.standard_normal,
            lilliefors_statistic,
            vectorized=True,
            n_resamples=n_resamples,
            batch=max(1, min(n_resamples, 2_000_000 // x.size)),
            alternative="greater",
        )
        statistic, p_value = float(result.statistic), float(result.pvalue)
        details.update(method="lilliefors_monte_carlo", n_resamples=n_resamples)
    return StatsReport(
        test="normality",
        ks_statistic=statistic,
        p_value=min(max(p_value, 0.0), 1.0),
        verdict=(not info["degenerate"]) and p_value > alpha,
        alpha=alpha,
        details=details,
        **info,
    )


def isotropy_test(
    component_samples: Sequence[np.ndarray],
    alpha: float = DEFAULT_ALPHA,
    labels: Optional[Sequence[str]] = None,
) -> StatsReport:
    """
    Pairwise two-sample KS comparison of per-direction sample sets.

    The verdict passes when every pair has p > alpha / (number of pairs).
    The same test serves for homogeneity across base states.

    Args:
        component_samples: At least two sample sets of at least 1000 samples
        alpha: Family-wise significance level
        labels: Optional names of the sets

    Returns:
        StatsReport over the pooled samples, with pairwise results in details

    Raises:
        InsufficientSamplesError: If fewer than two sets or too few samples are given
    """
    sets: List[np.ndarray] = [np.asarray(s, dtype=float).ravel() for s in component_samples]
    if len(sets) < 2:
        raise InsufficientSamplesError(f"need at least two sample sets, got {len(sets)}")
    smallest = min(s.size for s in sets)
    if smallest < MIN_ISOTROPY_SAMPLES:
        raise InsufficientSamplesError(
            f"need at least {MIN_ISOTROPY_SAMPLES} samples per set, got {smallest}"
        )
    labels = list(labels) if labels is not None else [f"set{i}" for i in range(len(sets))]
    pairs = list(combinations(range(len(sets)), 2))
    corrected = alpha / len(pairs)
    rows = []
    for i, j in pairs:
        result = scipy.stats.ks_2samp(sets[i], sets[j])
        rows.append(
            {
                "first": labels[i],
                "second": labels[j],
                "statistic": float(result.statistic),
                "p_value": float(result.pvalue),
                "variance_ratio": float(np.var(sets[i], ddof=1) / np.var(sets[j], ddof=1))
                if np.var(sets[j]) > 0
                else float("inf"),
            }
        )
    worst = min(rows, key=lambda row: row["p_value"])
    info = describe(np.concatenate(sets), min_samples=2)
    return StatsReport(
        test="isotropy",
        ks_statistic=max(row["statistic"] for row in rows),
        p_value=worst["p_value"],
        verdict=all(row["p_value"] > corrected for row in rows),
        alpha=alpha,
        details={"corrected_alpha": corrected, "pairs": rows, "labels": labels},
        **info,
    )
