"""
Transition statistics of walk ensembles against the Born rule.

For each target state, the fraction of trials whose fixed-time state
lies within a Fubini-Study ball of radius epsilon around the target is
set against the transition probability |(target, phi0)|^2. On the packet
manifold the same probability equals exp(-|a - b|^2 / 4 sigma^2).
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "BornTarget",
    "targets_at_distances",
    "born_rule_curve",
    "epsilon_sensitivity",
    "frequency_agreement",
    "manifold_born_table",
]

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ..grid.hilbert import inner_product
from ..logger import NullLogger, log_event
from ..manifold.packets import make_packet, overlap_gaussian
from ..types import GridSpec, PacketParams, SimulationEvent, SimulationLogger
from ..walks.config import WalkEnsemble
from ..walks.unconstrained import fiber_orthogonal_directions


@dataclass(frozen=True)
class BornTarget:
    """A target state for transition statistics."""

    label: str
    """Name used in tables."""

    state: np.ndarray
    """Unit coefficient vector."""

    group: Optional[str] = None
    """Targets sharing a group are expected to have equal frequencies."""

    def __post_init__(self) -> None:
        state = np.asarray(self.state, dtype=complex).ravel()
        if abs(np.linalg.norm(state) - 1.0) > 1e-8:
            raise ValueError(f"target {self.label} must be unit-normalized")
        object.__setattr__(self, "state", state)


def targets_at_distances(
    phi0: np.ndarray,
    distances: Sequence[float],
    per_distance: int,
    rng: np.random.Generator,
) -> List[BornTarget]:
    """
    Targets at prescribed Fubini-Study distances from phi0.

    Each target is cos(theta) phi0 + sin(theta) v with a random unit v
    orthogonal to phi0, so its distance is exactly theta.

    Args:
        phi0: Unit initial vector
        distances: Angles theta in [0, pi/2]
        per_distance: Targets per angle (distinct random directions)
        rng: Generator

    Returns:
        Targets grouped by angle
    """
    phi0 = np.asarray(phi0, dtype=complex).ravel()
    targets = []
    for index, theta in enumerate(distances):
        if not 0.0 <= theta <= np.pi / 2:
            raise ValueError(f"distance must lie in [0, pi/2], got {theta}")
        directions = fiber_orthogonal_directions(phi0, per_distance, rng)
        for j, v in enumerate(directions):
            targets.append(
                BornTarget(
                    label=f"theta{index}_{j}",
                    state=np.cos(theta) * phi0 + np.sin(theta) * v,
                    group=f"theta{index}",
                )
            )
    return targets


def _final_states(ensemble: Union[WalkEnsemble, np.ndarray]) -> np.ndarray:
    if isinstance(ensemble, WalkEnsemble):
        if ensemble.final_states is None:
            raise ValueError("ensemble was recorded without final states; use RecordPolicy.FULL")
        return ensemble.final_states
    return np.atleast_2d(np.asarray(ensemble, dtype=complex))


def born_rule_curve(
    ensemble: Union[WalkEnsemble, np.ndarray],
    phi0: np.ndarray,
    targets: Sequence[BornTarget],
    epsilon: float,
    logger: SimulationLogger = NullLogger(),
) -> pd.DataFrame:
    """
    Empirical epsilon-ball frequencies next to Born probabilities.

    Args:
        ensemble: Walk ensemble with final states, or an array (n_trials, N)
        phi0: Unit initial vector
        targets: Target states
        epsilon: Fubini-Study ball radius
        logger: Receives a WARNING for every zero-hit target

    Returns:
        DataFrame with target, group, fs_distance, born_probability, hits,
        trials, frequency, std_error, zero_hits
    """
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    finals = _final_states(ensemble)
    phi0 = np.asarray(phi0, dtype=complex).ravel()
    n = finals.shape[0]
    rows = []
    for target in targets:
        overlap = np.abs(finals @ np.conj(target.state))
        distance = np.arccos(np.clip(overlap, 0.0, 1.0))
        hits = int(np.count_nonzero(distance <= epsilon))
        frequency = hits / n
        born = float(abs(np.vdot(target.state, phi0)) ** 2)
        rows.append(
            {
                "target": target.label,
                "group": target.group,
                "fs_distance": float(np.arccos(np.clip(np.sqrt(born), 0.0, 1.0))),
                "born_probability": born,
                "hits": hits,
                "trials": n,
                "frequency": frequency,
                "std_error": float(np.sqrt(frequency * (1.0 - frequency) / n)),
                "zero_hits": hits == 0,
            }
        )
        if hits == 0:
            log_event(
                logger, SimulationEvent.WARNING, "born_rule_curve",
                reason="zero_hits", target=target.label, epsilon=epsilon,
            )
    return pd.DataFrame(rows)


def epsilon_sensitivity(
    ensemble: Union[WalkEnsemble, np.ndarray],
    phi0: np.ndarray,
    targets: Sequence[BornTarget],
    epsilons: Sequence[float],
) -> pd.DataFrame:
    """
    :func:`born_rule_curve` repeated over several ball radii.

    Args:
        ensemble: Walk ensemble with final states, or an array (n_trials, N)
        phi0: Unit initial vector
        targets: Target states
        epsilons: Ball radii

    Returns:
        Concatenated tables with an ``epsilon`` column
    """
    frames = []
    for epsilon in epsilons:
        frame = born_rule_curve(ensemble, phi0, targets, epsilon)
        frame.insert(0, "epsilon", epsilon)
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)


def frequency_agreement(
    first: float, second: float, trials: int, n_sigma: float = 3.0
) -> Tuple[float, bool]:
    """
    Compare two hit frequencies from the same number of trials.

    Args:
        first: First frequency
        second: Second frequency
        trials: Trials behind each frequency
        n_sigma: Allowed multiple of the pooled standard error

    Returns:
        (pooled standard error, whether |first - second| <= n_sigma * error)
    """
    pooled = 0.5 * (first + second)
    error = float(np.sqrt(2.0 * pooled * (1.0 - pooled) / trials))
    return error, abs(first - second) <= n_sigma * error


def manifold_born_table(
    center: float,
    offsets: Sequence[float],
    sigma: float,
    grid: Optional[GridSpec] = None,
) -> pd.DataFrame:
    """
    Born probabilities between packets at rest, closed form and on a grid.

    Args:
        center: Center a of the initial packet (one-dimensional)
        offsets: Displacements b - a of the target packets
        sigma: Packet width
        grid: Grid (defaults to N = 512, L = 40 sigma)

    Returns:
        DataFrame with offset, gaussian (exp(-offset^2 / 4 sigma^2)),
        born_closed_form (overlap squared), born_grid, closed_form_residual,
        grid_residual
    """
    grid = grid or GridSpec.for_packet(sigma)
    initial = make_packet(PacketParams(a=center, sigma=sigma), grid)
    rows = []
    for offset in offsets:
        gaussian = float(np.exp(-(offset**2) / (4.0 * sigma**2)))
        closed = overlap_gaussian(center, center + offset, sigma) ** 2
        target = make_packet(PacketParams(a=center + offset, sigma=sigma), grid)
        on_grid = abs(inner_product(target, initial)) ** 2
        rows.append(
            {
                "offset": offset,
                "gaussian": gaussian,
                "born_closed_form": closed,
                "born_grid": on_grid,
                "closed_form_residual": abs(closed - gaussian),
                "grid_residual": abs(on_grid - gaussian),
            }
        )
    return pd.DataFrame(rows)
