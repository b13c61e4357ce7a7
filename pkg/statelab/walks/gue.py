"""
Gaussian unitary ensemble sampling.

Entries follow the convention Var(H_jj) = s^2 and
Var(Re H_jk) = Var(Im H_jk) = s^2 / 2 for j < k, with H_kj = conj(H_jk).
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "GUEEnsemble",
    "sample_gue",
    "sample_gue_batch",
    "calibrate_scale",
    "semicircle_support",
    "empirical_spectrum",
]

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

MAX_DENSE_DIM = 512
"""Largest matrix dimension accepted for dense walks."""


@dataclass(frozen=True)
class GUEEnsemble:
    """Sampler parameters for Hermitian random matrices."""

    dim: int
    """Matrix dimension N."""

    scale: float = 1.0
    """Energy scale s fixing the entry variances; zero gives H = 0."""

    seed: Optional[int] = None
    """Seed for standalone sampling through :meth:`rng`."""

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ValueError(f"dim must be at least 2, got {self.dim}")
        if self.dim > MAX_DENSE_DIM:
            raise ValueError(f"dim is capped at {MAX_DENSE_DIM}, got {self.dim}")
        if not self.scale >= 0 or not np.isfinite(self.scale):
            raise ValueError(f"scale must be finite and non-negative, got {self.scale}")
        if self.seed is not None and not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")

    def rng(self) -> np.random.Generator:
        """Generator seeded from :attr:`seed` (fresh entropy when None)."""
        return np.random.default_rng(self.seed)


def sample_gue(ens: GUEEnsemble, rng: np.random.Generator) -> np.ndarray:
    """
    Draw one Hermitian matrix from the ensemble.

    Only the diagonal and the strict upper triangle are drawn; the lower
    triangle is their conjugate mirror, so the result is exactly Hermitian.

    Args:
        ens: Ensemble parameters
        rng: Generator owned by the caller

    Returns:
        Complex N x N Hermitian matrix
    """
    n = ens.dim
    upper = np.triu_indices(n, k=1)
    count = upper[0].size
    matrix = np.zeros((n, n), dtype=complex)
    diagonal = rng.normal(0.0, ens.scale, size=n)
    parts = rng.normal(0.0, ens.scale / np.sqrt(2.0), size=(2, count))
    off = parts[0] + 1j * parts[1]
    matrix[upper] = off
    matrix[upper[1], upper[0]] = np.conj(off)
    matrix[np.diag_indices(n)] = diagonal
    return matrix


def sample_gue_batch(ens: GUEEnsemble, rngs: Sequence[np.random.Generator]) -> np.ndarray:
    """
    Draw one matrix per generator.

    Args:
        ens: Ensemble parameters
        rngs: One generator per trial

    Returns:
        Stack of Hermitian matrices, shape (len(rngs), N, N)
    """
    return np.stack([sample_gue(ens, rng) for rng in rngs])


def calibrate_scale(step_std: float, sigma: float, hbar: float = 1.0) -> float:
    """
    GUE scale matching a Gaussian translation step in Fubini-Study angle.

    A translation by delta moves a packet by about delta / 2 sigma radians,
    while a GUE step moves a unit state by a tangent component of standard
    deviation (dt / hbar) s / sqrt(2) along any fixed direction. Equating
    the two gives s = hbar s_xi / (sqrt(2) sigma).

    Args:
        step_std: Per-axis velocity step standard deviation s_xi
        sigma: Packet width
        hbar: Reduced Planck constant

    Returns:
        Matching energy scale s

    Raises:
        ValueError: If sigma is not positive or step_std is negative
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if step_std < 0:
        raise ValueError(f"step_std must be non-negative, got {step_std}")
    return float(hbar * step_std / (np.sqrt(2.0) * sigma))


def semicircle_support(ens: GUEEnsemble) -> Tuple[float, float]:
    """Edges of the limiting Wigner semicircle, +-2 s sqrt(N)."""
    edge = 2.0 * ens.scale * np.sqrt(ens.dim)
    return -edge, edge


def empirical_spectrum(
    ens: GUEEnsemble, n_draws: int, rng: Optional[np.random.Generator] = None
) -> np.ndarray:
    """
    Pooled eigenvalues of independent draws.

    Args:
        ens: Ensemble parameters
        n_draws: Number of matrices
        rng: Generator (defaults to :meth:`GUEEnsemble.rng`)

    Returns:
        Sorted eigenvalues, shape (n_draws * N,)
    """
    if n_draws < 1:
        raise ValueError(f"n_draws must be positive, got {n_draws}")
    rng = rng or ens.rng()
    values = [np.linalg.eigvalsh(sample_gue(ens, rng)) for _ in range(n_draws)]
    return np.sort(np.concatenate(values))
