"""
Trajectory dumps of walk ensembles.

Dumps are long-format tables with columns (trial, step, fs_distance)
plus displacement or tangent-component columns when available.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["DUMP_TRIALS", "trajectory_frame", "records_frame", "write_trajectory_csv"]

from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

import numpy as np
import pandas as pd

from .config import WalkEnsemble, WalkRecord

DUMP_TRIALS = 100
"""Trials written to trajectory dumps by default."""


def trajectory_frame(ensemble: WalkEnsemble, max_trials: int = DUMP_TRIALS) -> pd.DataFrame:
    """
    Long-format table of the first trials of an ensemble.

    Args:
        ensemble: Walk ensemble
        max_trials: Number of leading trials to include

    Returns:
        DataFrame with trial, step, fs_distance and, for constrained walks,
        one displacement column per axis
    """
    n = min(max_trials, ensemble.distances.shape[0])
    n_points = ensemble.distances.shape[1]
    last_step = ensemble.config.n_steps
    steps = np.arange(n_points) if n_points > 1 else np.array([last_step])
    data: Dict[str, Any] = {
        "trial": np.repeat(np.arange(n), n_points),
        "step": np.tile(steps, n),
        "fs_distance": ensemble.distances[:n].ravel(),
    }
    if ensemble.displacements is not None:
        displacements = ensemble.displacements[:n][:, steps]
        for axis in range(displacements.shape[2]):
            data[f"d{axis}"] = displacements[:, :, axis].ravel()
    return pd.DataFrame(data)


def records_frame(records: Sequence[WalkRecord]) -> pd.DataFrame:
    """
    Long-format table of individual records, including tangent components.

    Args:
        records: Walk records with full distance trajectories

    Returns:
        DataFrame with trial, step, fs_distance and c0.. component columns
    """
    rows: List[Dict[str, Any]] = []
    for record in records:
        for step, distance in enumerate(record.distances):
            row: Dict[str, Any] = {"trial": record.trial, "step": step, "fs_distance": distance}
            if record.components is not None and step > 0:
                for j, value in enumerate(record.components[step - 1]):
                    row[f"c{j}"] = value
            rows.append(row)
    return pd.DataFrame(rows)


def write_trajectory_csv(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    """
    Write a trajectory table as CSV.

    Args:
        frame: Table from :func:`trajectory_frame` or :func:`records_frame`
        path: Destination file

    Returns:
        The written path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")
    return path
