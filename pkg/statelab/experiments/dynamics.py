"""
Deterministic dynamics experiments: velocity decomposition, Ehrenfest
projections and the quantum-classical trajectory comparison.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["DecomposeExperiment", "EhrenfestExperiment", "ClassicalCompareExperiment"]

from itertools import product
from typing import Iterator

import numpy as np
import pandas as pd

from ..config import ExperimentConfig, PotentialKind
from ..dynamics.classical import quantum_classical_compare
from ..dynamics.decomposition import decompose_velocity
from ..dynamics.ehrenfest import Observable, commutator_expectation, ehrenfest_projections, poisson_bracket
from ..experiment import ExperimentResult
from ..logger import NullLogger
from ..manifold.packets import make_packet
from ..types import PacketParams, SimulationLogger
from .base import below

RESIDUAL_TOL = 1e-6
COMPONENT_TOL = 1e-4
EHRENFEST_TOL = 1e-6


def _lattice(config: ExperimentConfig) -> Iterator[PacketParams]:
    # 3 x 3 lattice of (a, p) around the configured packet, along the first axis
    h = config.hamiltonian
    params = config.packet.params(h.mass, h.hbar)
    axis = np.zeros(params.dim)
    axis[0] = 1.0
    for da, dp in product((-1.0, 0.0, 1.0), repeat=2):
        yield params.moved(
            a=params.center + da * params.sigma * axis,
            p=params.momentum + dp * (h.hbar / params.sigma) * axis,
        )


POTENTIALS = (PotentialKind.FREE, PotentialKind.LINEAR, PotentialKind.HARMONIC)


class DecomposeExperiment:
    """Velocity decomposition over a phase-space lattice."""

    name = "decompose"

    def run(
        self, config: ExperimentConfig, logger: SimulationLogger = NullLogger()
    ) -> ExperimentResult:
        result = ExperimentResult(name=self.name)
        grid = config.grid.spec(config.packet.sigma)
        rows = []
        for kind in POTENTIALS:
            h = config.hamiltonian.spec(kind)
            for params in _lattice(config):
                decomposition = decompose_velocity(params, h, grid)
                measured = decomposition.measured()
                errors = decomposition.component_errors()
                row = {"potential": kind.value, "a": params.center[0], "p": params.momentum[0]}
                for key, value in measured.items():
                    row[f"{key}_measured"] = value
                    row[f"{key}_predicted"] = decomposition.predicted.get(key, 0.0)
                    row[f"{key}_error"] = errors[key]
                row["energy"] = decomposition.energy
                row["total_speed_sq"] = decomposition.total_speed_sq
                row["relative_residual"] = decomposition.relative_residual
                rows.append(row)
        table = pd.DataFrame(rows)
        result.tables["decomposition"] = table

        error_columns = [c for c in table.columns if c.endswith("_error")]
        result.criteria += [
            below(
                "decomposition_residual",
                table["relative_residual"].max(),
                RESIDUAL_TOL,
                "residual_sq / total_speed_sq over the lattice",
            ),
            below(
                "decomposition_components",
                table[error_columns].to_numpy().max(),
                COMPONENT_TOL,
                "largest relative error of a component against its closed form",
            ),
        ]
        return result


class EhrenfestExperiment:
    """Commutator expectations and tangent projections against Poisson brackets."""

    name = "ehrenfest"

    def run(
        self, config: ExperimentConfig, logger: SimulationLogger = NullLogger()
    ) -> ExperimentResult:
        result = ExperimentResult(name=self.name)
        grid = config.grid.spec(config.packet.sigma)
        rows = []
        for kind in POTENTIALS:
            h = config.hamiltonian.spec(kind)
            for params in _lattice(config):
                params = PacketParams(
                    a=params.center, p=params.momentum, sigma=params.sigma, mass=h.mass, hbar=h.hbar
                )
                phi = make_packet(params, grid)
                velocity_oracle = poisson_bracket(Observable.POSITION, params, h)
                force_oracle = poisson_bracket(Observable.MOMENTUM, params, h)
                x_rate = commutator_expectation(phi, Observable.POSITION, h)
                p_rate = commutator_expectation(phi, Observable.MOMENTUM, h)
                da_dt, dp_dt = ehrenfest_projections(params, h, grid)
                rows.append(
                    {
                        "potential": kind.value,
                        "a": params.center[0],
                        "p": params.momentum[0],
                        "velocity_oracle": velocity_oracle[0],
                        "force_oracle": force_oracle[0],
                        "commutator_x": x_rate[0],
                        "commutator_p": p_rate[0],
                        "projection_da_dt": da_dt[0],
                        "projection_dp_dt": dp_dt[0],
                        "max_error": float(
                            max(
                                np.max(np.abs(x_rate - velocity_oracle)),
                                np.max(np.abs(p_rate - force_oracle)),
                                np.max(np.abs(da_dt - velocity_oracle)),
                                np.max(np.abs(dp_dt - force_oracle)),
                            )
                        ),
                    }
                )
        table = pd.DataFrame(rows)
        result.tables["ehrenfest"] = table
        result.criteria.append(
            below(
                "ehrenfest",
                table["max_error"].max(),
                EHRENFEST_TOL,
                "grid commutators and projections against p/m and -grad V",
            )
        )
        return result


class ClassicalCompareExperiment:
    """Packet expectations against the Newtonian trajectory."""

    name = "classical-compare"

    def run(
        self, config: ExperimentConfig, logger: SimulationLogger = NullLogger()
    ) -> ExperimentResult:
        h_config = config.hamiltonian
        params = config.packet.params(h_config.mass, h_config.hbar)
        grid = config.grid.spec(params.sigma)
        h = h_config.spec(grid=grid)
        report = quantum_classical_compare(
            params, h, h_config.comparison_horizon(), h_config.dt, grid, logger
        )
        result = ExperimentResult(name=self.name, metadata=dict(report.metadata))
        result.tables["trajectories"] = report.table
        result.reports["comparison"] = {
            "max_position_deviation": report.max_position_deviation,
            "max_momentum_deviation": report.max_momentum_deviation,
            "tolerance": report.tolerance,
            **report.metadata,
        }
        result.criteria.append(
            below(
                "classical_trajectory",
                report.max_position_deviation,
                report.tolerance,
                "max |<x>(t) - a(t)| against the grid spacing",
            )
        )
        return result
