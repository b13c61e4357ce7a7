"""
Random-matrix walks in the full state space.

Each step applies exp(-i H_k dt / hbar) with a fresh, independent GUE
matrix H_k. Trials own their generators, so results do not depend on
chunking or on the number of worker threads.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "walk_unconstrained",
    "unconstrained_ensemble",
    "step_tangent_components",
    "fiber_orthogonal_directions",
    "sample_step_components",
    "project_gue_step_onto_classical",
    "ProductWalkResult",
    "product_state_defect",
    "walk_product",
]

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..grid.hilbert import evolve_dense_batch
from ..logger import NullLogger, log_event
from ..manifold.geometry import fubini_study_distance_vectors, tangent_frame
from ..types import GridSpec, PacketParams, SimulationEvent, SimulationLogger
from .config import RecordPolicy, WalkConfig, WalkEnsemble, WalkRecord, trial_rng, trial_seed
from .gue import GUEEnsemble, sample_gue, sample_gue_batch

UNIT_TOL = 1e-8
"""Tolerance on unit norm and fiber orthogonality of inputs."""


def _as_unit(phi: np.ndarray, name: str = "phi0") -> np.ndarray:
    phi = np.asarray(phi, dtype=complex).ravel()
    n = np.linalg.norm(phi)
    if abs(n - 1.0) > UNIT_TOL:
        raise ValueError(f"{name} must be unit-normalized, got norm {n:.12g}")
    return phi


def _require_ensemble(cfg: WalkConfig, dim: int) -> GUEEnsemble:
    if cfg.ensemble is None:
        raise ValueError("unconstrained walks need a GUE ensemble in the configuration")
    if cfg.ensemble.dim != dim:
        raise ValueError(
            f"ensemble dimension {cfg.ensemble.dim} does not match state dimension {dim}"
        )
    return cfg.ensemble


def _check_directions(phi: np.ndarray, directions: np.ndarray) -> np.ndarray:
    directions = np.atleast_2d(np.asarray(directions, dtype=complex))
    if directions.shape[1] != phi.shape[0]:
        raise ValueError(
            f"directions have length {directions.shape[1]}, expected {phi.shape[0]}"
        )
    norms = np.linalg.norm(directions, axis=1)
    if np.any(np.abs(norms - 1.0) > UNIT_TOL):
        raise ValueError("directions must be unit-normalized")
    if np.any(np.abs(directions @ np.conj(phi)) > UNIT_TOL):
        raise ValueError("directions must be orthogonal to the fiber of phi")
    return directions


def step_tangent_components(
    phi: np.ndarray,
    hamiltonian: np.ndarray,
    dt: float,
    directions: np.ndarray,
    hbar: float = 1.0,
) -> np.ndarray:
    """
    Real-metric components of one step -(i / hbar) H phi dt along directions.

    Args:
        phi: Unit vector of length N
        hamiltonian: Hermitian matrix (N, N), or a stack (B, N, N)
        dt: Time step
        directions: Unit, fiber-orthogonal vectors, shape (n_dirs, N)

    Returns:
        Components, shape (n_dirs,) for one matrix or (B, n_dirs) for a stack

    Raises:
        ValueError: On dimension mismatch or invalid directions
    """
    phi = _as_unit(phi, "phi")
    directions = _check_directions(phi, directions)
    hamiltonian = np.asarray(hamiltonian)
    if hamiltonian.shape[-1] != phi.shape[0]:
        raise ValueError(
            f"matrix of size {hamiltonian.shape[-1]} cannot act on a vector of length {phi.shape[0]}"
        )
    step = (-1j * dt / hbar) * (hamiltonian @ phi)
    return np.real(step @ np.conj(directions).T)


def fiber_orthogonal_directions(
    phi: np.ndarray, n_directions: int, rng: np.random.Generator
) -> np.ndarray:
    """
    Random unit directions orthogonal to phi and to each other.

    Orthogonality is in the complex sense, so the directions are also
    real-metric orthogonal to both phi and i phi.

    Args:
        phi: Unit vector of length N
        n_directions: Number of directions (at most N - 1)
        rng: Generator

    Returns:
        Array of shape (n_directions, N)
    """
    phi = _as_unit(phi, "phi")
    if not 1 <= n_directions < phi.shape[0]:
        raise ValueError(f"n_directions must be in [1, {phi.shape[0] - 1}], got {n_directions}")
    basis = [phi]
    for _ in range(n_directions):
        v = rng.standard_normal(phi.shape[0]) + 1j * rng.standard_normal(phi.shape[0])
        for b in basis:
            v = v - np.vdot(b, v) * b
        for b in basis:
            v = v - np.vdot(b, v) * b
        basis.append(v / np.linalg.norm(v))
    return np.array(basis[1:])


def _moving_components(
    states: np.ndarray,
    hamiltonians: np.ndarray,
    directions: np.ndarray,
    dt: float,
    hbar: float,
) -> np.ndarray:
    # directions are re-projected off the fiber of the current state
    overlaps = np.conj(states) @ directions.T
    moved = directions[None, :, :] - overlaps[:, :, None] * states[:, None, :]
    moved /= np.linalg.norm(moved, axis=2, keepdims=True)
    steps = (-1j * dt / hbar) * np.einsum("bij,bj->bi", hamiltonians, states)
    return np.real(np.einsum("bdi,bi->bd", np.conj(moved), steps))


def _run_chunk(
    phi0: np.ndarray,
    cfg: WalkConfig,
    trials: range,
    directions: Optional[np.ndarray] = None,
) -> Tuple[np.ndarray, np.ndarray, Optional[np.ndarray]]:
    ens = _require_ensemble(cfg, phi0.shape[0])
    rngs = [trial_rng(cfg.master_seed, t) for t in trials]
    states = np.tile(phi0, (len(rngs), 1))
    full = cfg.record == RecordPolicy.FULL
    distances = np.zeros((len(rngs), cfg.n_steps + 1 if full else 1))
    components = None
    if directions is not None:
        components = np.empty((len(rngs), cfg.n_steps, directions.shape[0]))
    for k in range(cfg.n_steps):
        hamiltonians = sample_gue_batch(ens, rngs)
        if components is not None:
            components[:, k] = _moving_components(states, hamiltonians, directions, cfg.dt, cfg.hbar)
        states = evolve_dense_batch(states, hamiltonians, cfg.dt, cfg.hbar)
        if full:
            distances[:, k + 1] = fubini_study_distance_vectors(phi0, states)
    if not full:
        distances[:, 0] = fubini_study_distance_vectors(phi0, states)
    return distances, states, components


def walk_unconstrained(
    phi0: np.ndarray,
    cfg: WalkConfig,
    trial: int = 0,
    directions: Optional[np.ndarray] = None,
) -> WalkRecord:
    """
    Run one trial of a GUE walk from phi0.

    Args:
        phi0: Unit coefficient vector of length N
        cfg: Walk configuration with a GUE ensemble of dimension N
        trial: Trial index selecting the generator
        directions: Optional directions; when given, the tangent components
            of every step along them are recorded, after re-projecting them
            off the fiber of the state at that step.

    Returns:
        WalkRecord for the trial

    Raises:
        ValueError: If phi0 is not unit-normalized or dimensions mismatch
    """
    phi0 = _as_unit(phi0)
    if directions is not None:
        directions = np.atleast_2d(np.asarray(directions, dtype=complex))
    distances, states, components = _run_chunk(phi0, cfg, range(trial, trial + 1), directions)
    return WalkRecord(
        trial=trial,
        seed=trial_seed(cfg.master_seed, trial),
        distances=distances[0],
        final_state=states[0] if cfg.record == RecordPolicy.FULL else None,
        components=None if components is None else components[0],
    )


def unconstrained_ensemble(
    phi0: np.ndarray, cfg: WalkConfig, logger: SimulationLogger = NullLogger()
) -> WalkEnsemble:
    """
    Run ``cfg.n_trials`` independent GUE walks from phi0.

    Args:
        phi0: Unit coefficient vector of length N
        cfg: Walk configuration with a GUE ensemble of dimension N
        logger: Logger for per-chunk events (defaults to NullLogger)

    Returns:
        WalkEnsemble in trial order
    """
    phi0 = _as_unit(phi0)

    def run(trials: range) -> Tuple[np.ndarray, np.ndarray, Optional[np.ndarray]]:
        log_event(
            logger, SimulationEvent.TRIAL_STARTED, "unconstrained_ensemble",
            first=trials.start, last=trials.stop - 1,
        )
        result = _run_chunk(phi0, cfg, trials)
        log_event(
            logger, SimulationEvent.TRIAL_FINISHED, "unconstrained_ensemble",
            first=trials.start, last=trials.stop - 1,
        )
        return result

    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        parts = list(pool.map(run, cfg.chunks()))

    finals = np.concatenate([p[1] for p in parts])
    norms = np.linalg.norm(finals, axis=1)
    return WalkEnsemble(
        config=cfg,
        distances=np.concatenate([p[0] for p in parts]),
        seeds=np.array([trial_seed(cfg.master_seed, t) for t in range(cfg.n_trials)], dtype=np.uint64),
        final_states=finals if cfg.record == RecordPolicy.FULL else None,
        metadata={"max_norm_defect": float(np.max(np.abs(norms - 1.0)))},
    )


def sample_step_components(
    phi: np.ndarray,
    ens: GUEEnsemble,
    dt: float,
    directions: np.ndarray,
    n_samples: int,
    master_seed: int = 0,
    hbar: float = 1.0,
    chunk_size: int = 64,
) -> np.ndarray:
    """
    Tangent components of independent single GUE steps at a fixed state.

    Sample j uses the generator of trial j under ``master_seed``.

    Args:
        phi: Unit vector of length N
        ens: Ensemble of dimension N
        dt: Time step
        directions: Unit, fiber-orthogonal vectors, shape (n_dirs, N)
        n_samples: Number of sampled matrices
        master_seed: Seed the per-sample generators derive from
        hbar: Reduced Planck constant
        chunk_size: Matrices drawn per batch

    Returns:
        Components, shape (n_samples, n_dirs)
    """
    phi = _as_unit(phi, "phi")
    if ens.dim != phi.shape[0]:
        raise ValueError(f"ensemble dimension {ens.dim} does not match state dimension {phi.shape[0]}")
    if n_samples < 1:
        raise ValueError(f"n_samples must be positive, got {n_samples}")
    directions = _check_directions(phi, directions)
    out = np.empty((n_samples, directions.shape[0]))
    for start in range(0, n_samples, chunk_size):
        stop = min(start + chunk_size, n_samples)
        rngs = [trial_rng(master_seed, j) for j in range(start, stop)]
        out[start:stop] = step_tangent_components(
            phi, sample_gue_batch(ens, rngs), dt, directions, hbar
        )
    return out


def project_gue_step_onto_classical(
    params: PacketParams,
    ens: GUEEnsemble,
    dt: float,
    n_samples: int,
    grid: Optional[GridSpec] = None,
    master_seed: int = 0,
) -> np.ndarray:
    """
    Components of GUE steps at a packet along its position directions.

    The GUE acts in the orthonormal site basis of the grid, so the
    ensemble dimension must equal the number of grid sites.

    Args:
        params: Packet parameters
        ens: Ensemble of dimension N**d
        dt: Time step
        n_samples: Number of sampled matrices
        grid: Grid (defaults to L = 40 sigma with N = ens.dim per axis in 1D)
        master_seed: Seed the per-sample generators derive from

    Returns:
        Components along e_a, shape (n_samples, d)
    """
    grid = grid or GridSpec(dim=params.dim, points_per_axis=ens.dim, extent=40.0 * params.sigma)
    if grid.size != ens.dim:
        raise ValueError(f"ensemble dimension {ens.dim} does not match {grid.size} grid sites")
    frame = tangent_frame(params, grid)
    phi = frame.base.coefficients()
    directions = np.array([e.coefficients() for e in frame.e_a])
    return sample_step_components(phi, ens, dt, directions, n_samples, master_seed, params.hbar)


@dataclass(frozen=True)
class ProductWalkResult:
    """Outcome of a walk driven on one factor of a product state."""

    defects: np.ndarray
    """1 - Tr(rho_particle^2) after every step, shape (n_steps + 1,)."""

    particle_distances: np.ndarray
    """Fubini-Study distance of the particle factor from its initial state."""

    device_distances: np.ndarray
    """Fubini-Study distance of the device factor from its initial state."""

    @property
    def max_defect(self) -> float:
        """Largest purity defect along the walk."""
        return float(np.max(np.abs(self.defects)))


def product_state_defect(psi: np.ndarray, dims: Tuple[int, int]) -> float:
    """
    Distance of the reduced first-factor state from purity, 1 - Tr(rho^2).

    Args:
        psi: Unit vector on the tensor product, length dims[0] * dims[1]
        dims: Factor dimensions

    Returns:
        Purity defect; zero exactly for product states
    """
    matrix = np.asarray(psi, dtype=complex).reshape(dims)
    rho = matrix @ matrix.conj().T
    return float(1.0 - np.real(np.trace(rho @ rho)))


def _factor(psi: np.ndarray, dims: Tuple[int, int]) -> Tuple[np.ndarray, np.ndarray]:
    u, s, vh = np.linalg.svd(np.asarray(psi).reshape(dims))
    return u[:, 0], vh[0]


def walk_product(
    particle: np.ndarray,
    device: np.ndarray,
    cfg: WalkConfig,
    trial: int = 0,
) -> ProductWalkResult:
    """
    GUE walk of a particle coupled to a frozen device.

    Every step applies H_particle (x) I_device on the product state; the
    state must stay a product, so the particle purity defect stays at
    round-off and the device factor does not move.

    Args:
        particle: Unit vector of the particle factor (dimension = ensemble dim)
        device: Unit vector of the device factor
        cfg: Walk configuration with a GUE ensemble of the particle dimension
        trial: Trial index selecting the generator

    Returns:
        Per-step purity defects and factor distances
    """
    particle = _as_unit(particle, "particle")
    device = _as_unit(device, "device")
    ens = _require_ensemble(cfg, particle.shape[0])
    dims = (particle.shape[0], device.shape[0])
    identity = np.eye(dims[1])
    rng = trial_rng(cfg.master_seed, trial)
    psi = np.kron(particle, device)
    defects: List[float] = [product_state_defect(psi, dims)]
    particle_d: List[float] = [0.0]
    device_d: List[float] = [0.0]
    for _ in range(cfg.n_steps):
        hamiltonian = np.kron(sample_gue(ens, rng), identity)
        psi = evolve_dense_batch(psi[None, :], hamiltonian[None, :, :], cfg.dt, cfg.hbar)[0]
        defects.append(product_state_defect(psi, dims))
        left, right = _factor(psi, dims)
        particle_d.append(float(fubini_study_distance_vectors(particle, left)))
        device_d.append(float(fubini_study_distance_vectors(device, right)))
    return ProductWalkResult(
        defects=np.array(defects),
        particle_distances=np.array(particle_d),
        device_distances=np.array(device_d),
    )
