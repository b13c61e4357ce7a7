"""
Walk configuration, per-trial records and reproducible seeding.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "RecordPolicy",
    "WalkConfig",
    "WalkRecord",
    "WalkEnsemble",
    "trial_rng",
    "trial_seed",
]

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from .gue import GUEEnsemble


class RecordPolicy(str, Enum):
    """How much of each trial a walk keeps."""

    FULL = "full"
    """Distances at every step and the final state."""

    SUMMARY = "summary"
    """Final distance only."""


def trial_rng(master_seed: int, trial: int) -> np.random.Generator:
    """
    Generator for one trial, independent of how trials are scheduled.

    Args:
        master_seed: Run-level seed
        trial: Trial index

    Returns:
        Generator seeded by SeedSequence(master_seed, spawn_key=(trial,))
    """
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=(trial,)))


def trial_seed(master_seed: int, trial: int) -> int:
    """64-bit digest of the per-trial seed sequence, for manifests."""
    state = np.random.SeedSequence(master_seed, spawn_key=(trial,)).generate_state(
        1, dtype=np.uint64
    )
    return int(state[0])


@dataclass(frozen=True)
class WalkConfig:
    """
    Parameters of a random walk ensemble.

    Unconstrained walks use ``ensemble``; constrained (translation) walks
    use ``step_std``.
    """

    n_steps: int = 100
    """Number of steps per trial."""

    dt: float = 0.1
    """Time step."""

    n_trials: int = 1
    """Number of independent trials."""

    master_seed: int = 0
    """Run-level seed; trial seeds are derived from it."""

    ensemble: Optional[GUEEnsemble] = None
    """Random-matrix ensemble for unconstrained walks."""

    step_std: float = 1.0
    """Per-axis standard deviation s_xi of the velocity steps of constrained walks."""

    hbar: float = 1.0
    """Reduced Planck constant."""

    record: RecordPolicy = RecordPolicy.FULL
    """Record policy."""

    chunk_size: int = 256
    """Trials propagated together in one batch."""

    workers: int = 1
    """Threads used to run chunks; results do not depend on it."""

    def __post_init__(self) -> None:
        if self.n_steps < 1:
            raise ValueError(f"n_steps must be at least 1, got {self.n_steps}")
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.n_trials < 1:
            raise ValueError(f"n_trials must be at least 1, got {self.n_trials}")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError(f"master_seed must fit in 64 bits, got {self.master_seed}")
        if self.step_std < 0:
            raise ValueError(f"step_std must be non-negative, got {self.step_std}")
        if self.chunk_size < 1:
            raise ValueError(f"chunk_size must be positive, got {self.chunk_size}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        object.__setattr__(self, "record", RecordPolicy(self.record))

    def chunks(self) -> List[range]:
        """Trial index ranges of the batches, in order."""
        return [
            range(start, min(start + self.chunk_size, self.n_trials))
            for start in range(0, self.n_trials, self.chunk_size)
        ]


@dataclass(frozen=True)
class WalkRecord:
    """Outcome of a single trial."""

    trial: int
    """Trial index."""

    seed: int
    """Per-trial seed digest."""

    distances: np.ndarray
    """Fubini-Study distance to the initial state; steps 0..n under FULL, final only under SUMMARY."""

    final_state: Optional[np.ndarray] = None
    """Final coefficient vector (FULL policy)."""

    components: Optional[np.ndarray] = None
    """Per-step tangent components, shape (n_steps, n_directions), when requested."""

    displacement: Optional[np.ndarray] = None
    """Total displacement of a constrained walk."""

    metadata: Dict[str, Any] = field(default_factory=dict)
    """Diagnostics such as the translation error."""

    def __post_init__(self) -> None:
        d = np.asarray(self.distances)
        if np.any(d < 0) or np.any(d > np.pi / 2 + 1e-12):
            raise ValueError("distances must lie in [0, pi/2]")


@dataclass(frozen=True)
class WalkEnsemble:
    """Outcome of an ensemble of trials, in trial order."""

    config: WalkConfig
    """Configuration the ensemble was run with."""

    distances: np.ndarray
    """Distances, shape (n_trials, n_steps + 1) under FULL or (n_trials, 1) under SUMMARY."""

    seeds: np.ndarray
    """Per-trial seed digests, shape (n_trials,)."""

    final_states: Optional[np.ndarray] = None
    """Final vectors, shape (n_trials, N), under FULL."""

    displacements: Optional[np.ndarray] = None
    """Cumulative displacements of constrained walks, shape (n_trials, n_steps + 1, d)."""

    metadata: Dict[str, Any] = field(default_factory=dict)
    """Aggregate diagnostics."""

    @property
    def final_distances(self) -> np.ndarray:
        """Distance to the initial state at the last step."""
        return self.distances[:, -1]

    def record(self, trial: int) -> WalkRecord:
        """
        Rebuild the record of one trial.

        Args:
            trial: Trial index

        Returns:
            WalkRecord view of that trial
        """
        return WalkRecord(
            trial=trial,
            seed=int(self.seeds[trial]),
            distances=self.distances[trial],
            final_state=None if self.final_states is None else self.final_states[trial],
            displacement=None
            if self.displacements is None
            else self.displacements[trial, -1],
        )
