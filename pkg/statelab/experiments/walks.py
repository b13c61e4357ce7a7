"""
Random-walk experiments.

``gue-walk`` samples GUE steps at a packet and at dense base states and
tests their tangent components for normality, isotropy and homogeneity;
``constrained-walk`` runs translation walks of a packet and fits the
diffusion of the displacement.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["GUEWalkExperiment", "ConstrainedWalkExperiment"]

import numpy as np
import pandas as pd

from ..config import ExperimentConfig
from ..experiment import ExperimentResult
from ..logger import NullLogger
from ..macro import fs_angle_of_displacement
from ..stats.diffusion import diffusion_fit
from ..stats.hypothesis import isotropy_test, normality_test
from ..types import GridSpec, SimulationLogger
from ..walks.config import RecordPolicy, WalkConfig
from ..walks.constrained import constrained_ensemble
from ..walks.gue import GUEEnsemble, calibrate_scale, empirical_spectrum, semicircle_support
from ..walks.io import trajectory_frame
from ..walks.unconstrained import (
    fiber_orthogonal_directions,
    project_gue_step_onto_classical,
    sample_step_components,
    unconstrained_ensemble,
)
from .base import above, auxiliary_rng, below, seed_record, sub_seed

SPECTRUM_DRAWS = 20
TRANSLATION_TOL = 1e-8
DISTANCE_TOL = 1e-6


def _gue_scale(config: ExperimentConfig) -> float:
    if config.walk.gue_scale is not None:
        return config.walk.gue_scale
    return calibrate_scale(config.walk.step_std, config.packet.sigma, config.hamiltonian.hbar)


def _base_states(dim: int, rng: np.random.Generator) -> np.ndarray:
    # a site basis vector and a random unit vector
    first = np.zeros(dim, dtype=complex)
    first[0] = 1.0
    second = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return np.stack([first, second / np.linalg.norm(second)])


class GUEWalkExperiment:
    """Normality, isotropy and homogeneity of GUE tangent steps."""

    name = "gue-walk"

    def run(
        self, config: ExperimentConfig, logger: SimulationLogger = NullLogger()
    ) -> ExperimentResult:
        seed = config.seed
        walk, stats, h = config.walk, config.stats, config.hamiltonian
        scale = _gue_scale(config)
        hbar = h.hbar
        expected_std = walk.dt * scale / (np.sqrt(2.0) * hbar)
        result = ExperimentResult(name=self.name, metadata={"gue_scale": scale})

        # steps at a packet, along its position directions
        params = config.packet.params(h.mass, hbar)
        grid = GridSpec(
            dim=params.dim,
            points_per_axis=stats.component_grid_points,
            extent=40.0 * params.sigma,
        )
        packet_ens = GUEEnsemble(dim=grid.size, scale=scale)
        packet_seed = sub_seed(seed, 0)
        along_a = project_gue_step_onto_classical(
            params, packet_ens, walk.dt, stats.component_samples, grid, packet_seed
        )
        packet_report = normality_test(
            along_a[:, 0], stats.alpha, mean=0.0, std=expected_std, n_resamples=stats.n_resamples
        )
        result.reports["packet_components_normality"] = packet_report
        result.seeds["packet_components"] = seed_record(packet_seed, stats.component_samples)

        # dense walks: fiber-orthogonal directions at two base states
        ens = GUEEnsemble(dim=walk.gue_dim, scale=scale)
        bases = _base_states(walk.gue_dim, auxiliary_rng(seed, 0))
        samples = {}
        for b, phi in enumerate(bases):
            directions = fiber_orthogonal_directions(
                phi, stats.isotropy_directions, auxiliary_rng(seed, 1 + b)
            )
            base_seed = sub_seed(seed, 1 + b)
            components = sample_step_components(
                phi, ens, walk.dt, directions, stats.component_samples, base_seed, hbar
            )
            result.seeds[f"base{b}_components"] = seed_record(base_seed, stats.component_samples)
            for j in range(directions.shape[0]):
                samples[f"base{b}_dir{j}"] = components[:, j]

        labels = list(samples)
        first_base = [label for label in labels if label.startswith("base0_")]
        isotropy = isotropy_test([samples[k] for k in first_base], stats.alpha, first_base)
        homogeneity = isotropy_test([samples[k] for k in labels], stats.alpha, labels)
        dense_normality = normality_test(
            samples[labels[0]], stats.alpha, mean=0.0, std=expected_std, n_resamples=stats.n_resamples
        )
        result.reports["isotropy"] = isotropy
        result.reports["homogeneity"] = homogeneity
        result.reports["dense_components_normality"] = dense_normality
        result.tables["component_moments"] = pd.DataFrame(
            [
                {
                    "set": label,
                    "mean": float(np.mean(x)),
                    "variance": float(np.var(x, ddof=1)),
                    "expected_variance": expected_std**2,
                }
                for label, x in samples.items()
            ]
        )

        # distance trajectories of a few walks
        n_dump = max(1, min(walk.dump_trials, walk.n_trials))
        walk_seed = sub_seed(seed, 3)
        cfg = WalkConfig(
            n_steps=walk.n_steps,
            dt=walk.dt,
            n_trials=n_dump,
            master_seed=walk_seed,
            ensemble=ens,
            hbar=hbar,
            record=RecordPolicy.FULL,
            chunk_size=walk.chunk_size,
            workers=walk.workers,
        )
        ensemble = unconstrained_ensemble(bases[0], cfg, logger)
        result.tables["trajectories"] = trajectory_frame(ensemble, n_dump)
        result.seeds["trajectories"] = seed_record(walk_seed, n_dump)

        eigenvalues = empirical_spectrum(ens, SPECTRUM_DRAWS, auxiliary_rng(seed, 4))
        low, high = semicircle_support(ens)
        result.reports["spectrum"] = {
            "support": [low, high],
            "draws": SPECTRUM_DRAWS,
            "min_eigenvalue": float(eigenvalues[0]),
            "max_eigenvalue": float(eigenvalues[-1]),
            "fraction_inside": float(np.mean((eigenvalues >= low) & (eigenvalues <= high))),
        }

        result.criteria += [
            above("packet_components_normality", packet_report.p_value, stats.alpha,
                  "KS p-value of GUE step components along e_a"),
            above("dense_components_normality", dense_normality.p_value, stats.alpha,
                  "KS p-value of dense step components"),
            above("isotropy", isotropy.p_value, isotropy.details["corrected_alpha"],
                  "smallest pairwise p-value across directions, Bonferroni"),
            above("homogeneity", homogeneity.p_value, homogeneity.details["corrected_alpha"],
                  "smallest pairwise p-value across directions and base states, Bonferroni"),
            below("norm_preservation", ensemble.metadata["max_norm_defect"], 1e-10,
                  "largest | |phi| - 1 | after the walks"),
        ]
        return result


class ConstrainedWalkExperiment:
    """Translation walks of a packet: normality and diffusion of the displacement."""

    name = "constrained-walk"

    def run(
        self, config: ExperimentConfig, logger: SimulationLogger = NullLogger()
    ) -> ExperimentResult:
        seed = config.seed
        walk, stats, h = config.walk, config.stats, config.hamiltonian
        params = config.packet.params(h.mass, h.hbar)
        grid = config.grid.spec(params.sigma)
        cfg = WalkConfig(
            n_steps=walk.n_steps,
            dt=walk.dt,
            n_trials=walk.n_trials,
            master_seed=seed,
            step_std=walk.step_std,
            hbar=h.hbar,
            record=RecordPolicy.FULL,
            chunk_size=walk.chunk_size,
            workers=walk.workers,
        )
        ensemble = constrained_ensemble(params, cfg, grid, logger)
        result = ExperimentResult(name=self.name)
        result.seeds["walks"] = seed_record(seed, walk.n_trials)

        final = ensemble.displacements[:, -1, :]
        normality = normality_test(final[:, 0], stats.alpha, n_resamples=stats.n_resamples, seed=seed)
        result.reports["displacement_normality"] = normality

        times = np.arange(walk.n_steps + 1) * walk.dt
        fit = diffusion_fit(times[1:], ensemble.displacements[:, 1:, :])
        expected_variance = walk.n_steps * walk.step_std**2 * walk.dt**2
        expected_diffusion = walk.step_std**2 * walk.dt / 2.0
        variance = float(np.var(np.sort(final[:, 0]), ddof=1))
        result.reports["diffusion"] = {
            "diffusion": fit.diffusion,
            "expected_diffusion": expected_diffusion,
            "slope": fit.slope,
            "r_squared": fit.r_squared,
            "non_monotone": fit.non_monotone,
            "final_variance": variance,
            "expected_final_variance": expected_variance,
            "max_translation_error": ensemble.metadata["max_translation_error"],
        }
        result.tables["variance"] = pd.DataFrame({"t": fit.times, "variance": fit.variances})

        expected_angles = np.vectorize(fs_angle_of_displacement)(
            np.linalg.norm(final, axis=1), params.sigma
        )
        angle_error = float(np.max(np.abs(ensemble.final_distances - expected_angles)))
        result.tables["trajectories"] = trajectory_frame(ensemble, walk.dump_trials)

        tolerance = stats.relative_tolerance
        result.criteria += [
            above("displacement_normality", normality.p_value, stats.alpha,
                  "KS p-value of the final displacement, fitted normal"),
            below("final_variance", abs(variance / expected_variance - 1.0), tolerance,
                  "relative error of Var(d) against n s^2 dt^2"),
            below("diffusion_coefficient", abs(fit.diffusion / expected_diffusion - 1.0), tolerance,
                  "relative error of D against s^2 dt / 2"),
            below("translation", ensemble.metadata["max_translation_error"], TRANSLATION_TOL,
                  "walked state against the translated packet"),
            below("distance_identity", angle_error, DISTANCE_TOL,
                  "FS distance against arccos(exp(-d^2 / 8 sigma^2))"),
        ]
        return result
