"""
Macroscopic freezing estimate and the product-state check.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["MacroEstimateExperiment"]

import numpy as np

from ..config import ExperimentConfig
from ..experiment import Criterion, ExperimentResult
from ..logger import NullLogger
from ..macro import freezing_report, freezing_sweep
from ..types import SimulationLogger
from ..walks.config import WalkConfig
from ..walks.gue import GUEEnsemble
from ..walks.unconstrained import walk_product
from .base import auxiliary_rng, below, seed_record, sub_seed

PRODUCT_TOL = 1e-10


def _unit(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


class MacroEstimateExperiment:
    """Freezing chain, radius sweep and a walk on one factor of a product state."""

    name = "macro-estimate"

    def run(
        self, config: ExperimentConfig, logger: SimulationLogger = NullLogger()
    ) -> ExperimentResult:
        macro = config.macro
        scenario = macro.scenario()
        report = freezing_report(
            scenario,
            threshold=macro.threshold,
            reference_diffusion=macro.reference_diffusion,
            tabulated_viscosity=macro.tabulated_viscosity,
        )
        sweep = freezing_sweep(scenario, macro.sweep_radii(), threshold=macro.threshold)

        seed = config.seed
        rng = auxiliary_rng(seed, 0)
        particle = _unit(rng, macro.particle_dim)
        device = _unit(rng, macro.device_dim)
        walk_seed = sub_seed(seed, 0)
        product = walk_product(
            particle,
            device,
            WalkConfig(
                n_steps=macro.product_steps,
                dt=config.walk.dt,
                master_seed=walk_seed,
                ensemble=GUEEnsemble(dim=macro.particle_dim, scale=1.0),
                hbar=1.0,
            ),
        )

        result = ExperimentResult(name=self.name)
        result.reports["freezing_report"] = report.to_dict()
        result.tables["sweep"] = sweep
        result.reports["product_state"] = {
            "particle_dim": macro.particle_dim,
            "device_dim": macro.device_dim,
            "steps": macro.product_steps,
            "max_defect": product.max_defect,
            "max_device_distance": float(np.max(product.device_distances)),
            "final_particle_distance": float(product.particle_distances[-1]),
        }
        result.seeds["product_walk"] = seed_record(walk_seed, 1)

        chain = report.chain
        angles = sweep["angle"].to_numpy()
        result.criteria += [
            Criterion("chain_displacement", chain["displacement"], 1e-12,
                      bool(chain["displacement_in_bracket"]),
                      "displacement from the quoted D lies in [1e-13, 1e-12] m"),
            Criterion("chain_angle", chain["angle_at_order"], 1e-7,
                      bool(chain["angle_within_factor_3"]),
                      "angle of the order-of-magnitude displacement within a factor 3 of 1e-7 rad"),
            below("frozen", report.angle, report.threshold,
                  "FS angle of the observation-window displacement below theta_min"),
            Criterion("sweep_monotone", float(np.max(np.diff(angles))), 0.0,
                      bool(np.all(np.diff(angles) < 0)),
                      "angle strictly decreasing in the radius"),
            below("product_state", product.max_defect, PRODUCT_TOL,
                  "purity defect of the particle factor"),
            below("device_frozen", float(np.max(product.device_distances)), 1e-6,
                  "FS distance of the device factor from its initial state"),
        ]
        return result
