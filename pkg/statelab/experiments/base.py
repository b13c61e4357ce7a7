"""
Shared helpers of the named experiments.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["AUXILIARY_KEY", "auxiliary_rng", "sub_seed", "seed_record", "below", "above"]

from typing import Any, Dict

import numpy as np

from ..experiment import Criterion
from ..walks.config import trial_seed

AUXILIARY_KEY = 2**32
"""Spawn keys at or above this value are reserved for non-trial randomness."""


def auxiliary_rng(master_seed: int, index: int) -> np.random.Generator:
    """Generator for non-trial randomness (targets, base states, directions)."""
    return np.random.default_rng(
        np.random.SeedSequence(master_seed, spawn_key=(AUXILIARY_KEY + index,))
    )


def sub_seed(master_seed: int, index: int) -> int:
    """Independent master seed for the index-th ensemble of an experiment."""
    return trial_seed(master_seed, AUXILIARY_KEY + index)


def seed_record(master_seed: int, n_trials: int, shown: int = 4) -> Dict[str, Any]:
    """
    Manifest entry of a seeded ensemble.

    Args:
        master_seed: Seed the per-trial generators derive from
        n_trials: Number of trials
        shown: Leading per-trial seed digests to list

    Returns:
        Mapping with master_seed, n_trials and first_trial_seeds
    """
    return {
        "master_seed": int(master_seed),
        "n_trials": int(n_trials),
        "first_trial_seeds": [trial_seed(master_seed, t) for t in range(min(shown, n_trials))],
    }


def below(name: str, value: float, threshold: float, description: str = "") -> Criterion:
    """Criterion holding when ``value < threshold``."""
    return Criterion(name, float(value), float(threshold), bool(value < threshold), description)


def above(name: str, value: float, threshold: float, description: str = "") -> Criterion:
    """Criterion holding when ``value > threshold``."""
    return Criterion(name, float(value), float(threshold), bool(value > threshold), description)
