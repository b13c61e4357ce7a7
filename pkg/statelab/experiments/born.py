"""
Born-rule statistics of dense GUE walks.

Trials start from a site basis vector and take a few small GUE steps.
Targets are placed at fixed Fubini-Study distances from the start, two
per distance in independent directions; targets at equal distance must
collect the same ball frequency within sampling error.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["BornCheckExperiment", "typical_distance"]

from itertools import combinations

import numpy as np
import pandas as pd

from ..config import ExperimentConfig
from ..experiment import Criterion, ExperimentResult
from ..logger import NullLogger
from ..stats.born import (
    born_rule_curve,
    epsilon_sensitivity,
    frequency_agreement,
    manifold_born_table,
    targets_at_distances,
)
from ..types import SimulationLogger
from ..walks.config import RecordPolicy, WalkConfig
from ..walks.gue import GUEEnsemble
from ..walks.unconstrained import unconstrained_ensemble
from .base import auxiliary_rng, below, seed_record

CLOSED_FORM_TOL = 1e-12
GRID_TOL = 1e-6
MANIFOLD_OFFSETS = 9


def typical_distance(n_steps: int, dim: int, step_scale: float, hbar: float = 1.0) -> float:
    """
    RMS Fubini-Study distance after ``n_steps`` small GUE steps.

    Each step moves the state by a tangent vector with N - 1 complex
    components of variance (dt s / hbar)^2, so the distance grows as
    sqrt(n_steps (N - 1)) dt s / hbar while it stays small.

    Args:
        n_steps: Steps per trial
        dim: State dimension N
        step_scale: dt * s
        hbar: Reduced Planck constant

    Returns:
        Typical distance in radians
    """
    return float(np.sqrt(n_steps * (dim - 1)) * step_scale / hbar)


class BornCheckExperiment:
    """Ball frequencies of walk endpoints against Born probabilities."""

    name = "born-check"

    def run(
        self, config: ExperimentConfig, logger: SimulationLogger = NullLogger()
    ) -> ExperimentResult:
        seed = config.seed
        stats, walk, h = config.stats, config.walk, config.hamiltonian
        dt = walk.dt
        ens = GUEEnsemble(dim=stats.born_dim, scale=stats.born_step_scale / dt)
        cfg = WalkConfig(
            n_steps=stats.born_steps,
            dt=dt,
            n_trials=stats.born_trials,
            master_seed=seed,
            ensemble=ens,
            hbar=h.hbar,
            record=RecordPolicy.FULL,
            chunk_size=walk.chunk_size,
            workers=walk.workers,
        )
        phi0 = np.zeros(stats.born_dim, dtype=complex)
        phi0[0] = 1.0
        ensemble = unconstrained_ensemble(phi0, cfg, logger)

        delta = typical_distance(stats.born_steps, stats.born_dim, stats.born_step_scale, h.hbar)
        distances = [m * delta for m in stats.born_distance_multiples]
        targets = targets_at_distances(
            phi0, distances, stats.born_targets_per_distance, auxiliary_rng(seed, 0)
        )
        epsilon = stats.born_epsilon_multiple * delta
        curve = born_rule_curve(ensemble, phi0, targets, epsilon, logger)
        sensitivity = epsilon_sensitivity(
            ensemble, phi0, targets, [m * delta for m in stats.epsilon_multiples]
        )

        rows = []
        for group, members in curve.groupby("group", sort=True):
            for (_, first), (_, second) in combinations(members.iterrows(), 2):
                error, agree = frequency_agreement(
                    first["frequency"], second["frequency"], stats.born_trials
                )
                rows.append(
                    {
                        "group": group,
                        "first": first["target"],
                        "second": second["target"],
                        "difference": abs(first["frequency"] - second["frequency"]),
                        "pooled_error": error,
                        "agree": agree,
                    }
                )
        pairs = pd.DataFrame(rows, columns=["group", "first", "second", "difference", "pooled_error", "agree"])

        sigma = config.packet.sigma
        manifold = manifold_born_table(
            config.packet.center[0],
            np.linspace(0.0, 4.0 * sigma, MANIFOLD_OFFSETS),
            sigma,
            config.grid.spec(sigma) if config.grid.dim == 1 else None,
        )

        result = ExperimentResult(
            name=self.name,
            metadata={"typical_distance": delta, "epsilon": epsilon},
        )
        result.tables["born_curve"] = curve
        result.tables["epsilon_sensitivity"] = sensitivity
        result.tables["pairs"] = pairs
        result.tables["manifold_born"] = manifold
        result.seeds["walks"] = seed_record(seed, stats.born_trials)

        initial = curve.loc[curve["fs_distance"] == curve["fs_distance"].min(), "frequency"].max()
        result.criteria += [
            Criterion(
                "equal_distance_frequencies",
                float(pairs["difference"].max()) if len(pairs) else 0.0,
                float(3.0 * pairs["pooled_error"].max()) if len(pairs) else 0.0,
                bool(pairs["agree"].all()),
                "targets at equal FS distance agree within 3 pooled standard errors",
            ),
            Criterion(
                "initial_state_most_frequent",
                float(initial),
                float(curve["frequency"].max()),
                bool(initial >= curve["frequency"].max()),
                "the nearest target collects the largest frequency",
            ),
            below("manifold_closed_form", manifold["closed_form_residual"].max(), CLOSED_FORM_TOL,
                  "|<g_b, g_a>|^2 against exp(-(a-b)^2 / 4 sigma^2), closed form"),
            below("manifold_grid", manifold["grid_residual"].max(), GRID_TOL,
                  "|<g_b, g_a>|^2 against exp(-(a-b)^2 / 4 sigma^2), on the grid"),
        ]
        return result
