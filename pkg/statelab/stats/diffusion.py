"""
Diffusion-coefficient fits from displacement ensembles.

The variance of a coordinate grows as 2 D t for Brownian motion; D is
fitted as half the least-squares slope through the origin.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["DiffusionFit", "diffusion_fit", "simulate_brownian"]

from dataclasses import dataclass

import numpy as np

from ..errors import InsufficientSamplesError

MIN_TIME_POINTS = 3
"""Fewest time points accepted by :func:`diffusion_fit`."""


@dataclass(frozen=True)
class DiffusionFit:
    """Result of a variance-versus-time fit."""

    diffusion: float
    """Fitted diffusion coefficient D = slope / 2."""

    slope: float
    """Least-squares slope of variance against time, through the origin."""

    r_squared: float
    """Coefficient of determination of the fit."""

    non_monotone: bool
    """Set when the measured variance decreases somewhere."""

    times: np.ndarray
    """Time points."""

    variances: np.ndarray
    """Per-axis-averaged variance at each time point."""


def diffusion_fit(times: np.ndarray, displacements: np.ndarray) -> DiffusionFit:
    """
    Fit variance(t) = 2 D t through the origin.

    Samples are sorted along the trial axis before reduction, so the
    result does not depend on trial order.

    Args:
        times: Time points, shape (T,)
        displacements: Samples of shape (n_trials, T) or (n_trials, T, d);
            variances of several axes are averaged

    Returns:
        DiffusionFit

    Raises:
        InsufficientSamplesError: With fewer than three time points or two trials
        ValueError: On shape mismatch or negative times
    """
    t = np.asarray(times, dtype=float).ravel()
    x = np.asarray(displacements, dtype=float)
    if x.ndim == 2:
        x = x[:, :, None]
    if t.size < MIN_TIME_POINTS:
        raise InsufficientSamplesError(
            f"need at least {MIN_TIME_POINTS} time points, got {t.size}"
        )
    if x.shape[0] < 2:
        raise InsufficientSamplesError(f"need at least two trials, got {x.shape[0]}")
    if x.shape[1] != t.size:
        raise ValueError(f"displacements have {x.shape[1]} time points, expected {t.size}")
    if np.any(t < 0):
        raise ValueError("times must be non-negative")

    ordered = np.sort(x, axis=0)
    variances = np.var(ordered, axis=0, ddof=1).mean(axis=1)
    denominator = float(np.dot(t, t))
    slope = float(np.dot(t, variances) / denominator) if denominator > 0 else 0.0
    residual = float(np.sum((variances - slope * t) ** 2))
    total = float(np.sum((variances - variances.mean()) ** 2))
    r_squared = 1.0 - residual / total if total > 0 else (1.0 if residual == 0 else 0.0)
    return DiffusionFit(
        diffusion=slope / 2.0,
        slope=slope,
        r_squared=r_squared,
        non_monotone=bool(np.any(np.diff(variances) < 0)),
        times=t,
        variances=variances,
    )


def simulate_brownian(
    diffusion: float, times: np.ndarray, n_trials: int, rng: np.random.Generator, dim: int = 1
) -> np.ndarray:
    """
    Sample Brownian paths with independent Gaussian increments.

    Args:
        diffusion: Diffusion coefficient D
        times: Increasing time points starting at or after zero
        n_trials: Number of paths
        rng: Generator
        dim: Spatial dimension

    Returns:
        Positions of shape (n_trials, T, dim), starting from the origin at t = 0
    """
    t = np.asarray(times, dtype=float).ravel()
    gaps = np.diff(np.concatenate([[0.0], t]))
    if np.any(gaps < 0):
        raise ValueError("times must be increasing and non-negative")
    steps = rng.normal(size=(n_trials, t.size, dim)) * np.sqrt(2.0 * diffusion * gaps)[None, :, None]
    return np.cumsum(steps, axis=1)
