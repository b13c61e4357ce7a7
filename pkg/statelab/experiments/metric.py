"""
Metric identities on the packet manifold.

Compares the closed-form overlaps of packets with Fubini-Study angles
measured on the grid, checks the shifted position and momentum
identities at a packet, and reports the conditioning of a packet family.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["VerifyMetricExperiment"]

import numpy as np
import pandas as pd

from ..config import ExperimentConfig
from ..experiment import ExperimentResult
from ..logger import NullLogger
from ..manifold.geometry import (
    euclidean_distance_from_angle,
    fubini_study_distance,
    phase_space_metric_identity_residual,
    shifted_operator_identity_residuals,
)
from ..manifold.packets import (
    gram_min_singular_value,
    make_packet,
    overlap_gaussian,
    packet_gram_matrix,
)
from ..types import SimulationLogger
from .base import below

IDENTITY_TOL = 1e-6
LATTICE_POINTS = 17
PHASE_LATTICE_POINTS = 5
GRAM_PACKETS = 10


class VerifyMetricExperiment:
    """Residual tables of the packet metric identities."""

    name = "verify-metric"

    def run(
        self, config: ExperimentConfig, logger: SimulationLogger = NullLogger()
    ) -> ExperimentResult:
        h = config.hamiltonian
        params = config.packet.params(h.mass, h.hbar)
        sigma, hbar = params.sigma, params.hbar
        grid = config.grid.spec(sigma)
        axis = np.zeros(params.dim)
        axis[0] = 1.0
        result = ExperimentResult(name=self.name)

        # position lattice along the first axis
        rest = params.moved(p=np.zeros(params.dim))
        base = make_packet(rest, grid)
        rows = []
        for offset in np.linspace(-4.0 * sigma, 4.0 * sigma, LATTICE_POINTS):
            b = rest.center + offset * axis
            theta = fubini_study_distance(base, make_packet(rest.moved(a=b), grid))
            closed = overlap_gaussian(rest.center, b, sigma) ** 2
            rows.append(
                {
                    "offset": offset,
                    "closed_form": closed,
                    "cos2_grid": np.cos(theta) ** 2,
                    "fs_distance": theta,
                    "recovered_offset": euclidean_distance_from_angle(theta, sigma),
                    "residual": abs(closed - np.cos(theta) ** 2),
                }
            )
        metric = pd.DataFrame(rows)
        result.tables["metric_identity"] = metric

        rows = []
        offsets = np.linspace(-2.0 * sigma, 2.0 * sigma, PHASE_LATTICE_POINTS)
        kicks = np.linspace(-2.0 * hbar / sigma, 2.0 * hbar / sigma, PHASE_LATTICE_POINTS)
        for offset in offsets:
            for kick in kicks:
                residual = phase_space_metric_identity_residual(
                    params.center,
                    params.momentum,
                    params.center + offset * axis,
                    params.momentum + kick * axis,
                    sigma,
                    hbar,
                    grid,
                )
                rows.append({"offset": offset, "kick": kick, "residual": residual})
        phase = pd.DataFrame(rows)
        result.tables["phase_space_identity"] = phase

        rows = []
        for sign in (1, -1):
            position, momentum = shifted_operator_identity_residuals(params, grid, sign=sign)
            rows.append({"sign": sign, "position_residual": position, "momentum_residual": momentum})
        shifted = pd.DataFrame(rows)
        result.tables["shifted_operators"] = shifted

        centers = [rest.center + 2.0 * sigma * (j - GRAM_PACKETS // 2) * axis for j in range(GRAM_PACKETS)]
        closed_gram = packet_gram_matrix(centers, sigma)
        grid_gram = packet_gram_matrix(centers, sigma, grid)
        result.reports["gram"] = {
            "spacing": 2.0 * sigma,
            "packets": GRAM_PACKETS,
            "min_singular_value_closed_form": gram_min_singular_value(closed_gram),
            "min_singular_value_grid": gram_min_singular_value(grid_gram),
            "max_entry_discrepancy": float(np.max(np.abs(closed_gram - grid_gram))),
        }

        result.criteria += [
            below(
                "metric_identity",
                metric["residual"].max(),
                IDENTITY_TOL,
                "max |exp(-(a-b)^2/4 sigma^2) - cos^2 theta| over the position lattice",
            ),
            below(
                "phase_space_identity",
                phase["residual"].max(),
                IDENTITY_TOL,
                "max residual of the phase-space overlap identity",
            ),
            below(
                "shifted_momentum_identity",
                float(shifted.loc[shifted["sign"] == 1, "momentum_residual"].iloc[0]),
                IDENTITY_TOL,
                "(p - p I) phi = (i hbar / 2 sigma^2)(x - a) phi on the grid",
            ),
        ]
        result.metadata["grid"] = {"points_per_axis": grid.points_per_axis, "extent": grid.extent}
        return result
