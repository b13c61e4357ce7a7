"""
Grid discretization of L2(R^d): inner products, operators and unitary steps.

States live on a uniform periodic grid (:class:`~statelab.types.GridSpec`).
Position acts diagonally, momentum spectrally through the discrete
Fourier transform, and time steps use either Strang split-step Fourier
(grid Hamiltonians) or a dense eigendecomposition (random matrices).
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "inner_product",
    "real_metric",
    "norm",
    "normalize",
    "boundary_weight",
    "apply_position",
    "apply_momentum",
    "apply_kinetic",
    "apply_hamiltonian",
    "expectation",
    "SplitStepPropagator",
    "evolve_unitary",
    "evolve_dense",
    "evolve_dense_batch",
    "check_hermitian",
    "hamiltonian_matrix",
    "dense_reference",
    "mean_position",
    "mean_momentum",
]

import numpy as np
import scipy.linalg

from ..errors import GridMismatchError, NonHermitianError
from ..logger import NullLogger, log_event
from ..types import GridSpec, SimulationEvent, SimulationLogger, StateVector
from .potentials import HamiltonianSpec

HERMITIAN_TOL = 1e-12
"""Tolerance on max |H - H^dagger| relative to max(1, max |H|)."""

BOUNDARY_FRACTION = 1.0 / 16.0
"""Width of the boundary band, as a fraction of the axis length on each side."""

BOUNDARY_TOL = 1e-12
"""Probability mass in the boundary band above which operators flag a warning."""


def _check_same_grid(phi: StateVector, psi: StateVector) -> None:
    if phi.grid != psi.grid:
        raise GridMismatchError(f"grid mismatch: {phi.grid} vs {psi.grid}")


def inner_product(phi: StateVector, psi: StateVector) -> complex:
    """
    Discrete L2 inner product, conjugate-linear in the first argument.

    Args:
        phi: Bra state
        psi: Ket state

    Returns:
        sum conj(phi_i) psi_i dx**d

    Raises:
        GridMismatchError: If the states live on different grids
    """
    _check_same_grid(phi, psi)
    return complex(np.vdot(phi.amplitudes, psi.amplitudes) * phi.grid.cell_volume)


def real_metric(x: StateVector, y: StateVector) -> float:
    """
    Real Riemannian metric G(X, Y) = Re (X, Y) on the unit sphere.

    Args:
        x: First tangent vector
        y: Second tangent vector

    Returns:
        Real part of the inner product

    Raises:
        GridMismatchError: If the vectors live on different grids
    """
    return inner_product(x, y).real


def norm(phi: StateVector) -> float:
    """L2 norm of a grid vector."""
    return float(np.sqrt(np.sum(np.abs(phi.amplitudes) ** 2) * phi.grid.cell_volume))


def normalize(phi: StateVector) -> StateVector:
    """
    Rescale a vector to unit norm.

    Args:
        phi: Nonzero grid vector

    Returns:
        Unit-normalized copy

    Raises:
        ValueError: If the vector has zero norm
    """
    n = norm(phi)
    if n == 0.0 or not np.isfinite(n):
        raise ValueError(f"cannot normalize a vector of norm {n}")
    return phi.with_amplitudes(phi.amplitudes / n, **phi.metadata)


def boundary_weight(phi: StateVector) -> float:
    """
    Probability mass of ``phi`` in the boundary band of the grid.

    The band is the outer BOUNDARY_FRACTION of every axis on each side;
    periodic operators are only trustworthy when this mass is negligible.

    Args:
        phi: Grid vector

    Returns:
        sum over the band of |phi|**2 dx**d
    """
    grid = phi.grid
    band = max(1, int(grid.points_per_axis * BOUNDARY_FRACTION))
    mask = np.zeros(grid.shape, dtype=bool)
    for axis in range(grid.dim):
        index = [slice(None)] * grid.dim
        index[axis] = np.r_[0:band, grid.points_per_axis - band : grid.points_per_axis]
        mask[tuple(index)] = True
    return float(np.sum(np.abs(phi.amplitudes[mask]) ** 2) * grid.cell_volume)


def _flagged(phi: StateVector, amplitudes: np.ndarray) -> StateVector:
    weight = boundary_weight(phi)
    return phi.with_amplitudes(
        amplitudes, boundary_weight=weight, boundary_warning=weight > BOUNDARY_TOL
    )


def apply_position(phi: StateVector, axis: int = 0) -> StateVector:
    """
    Apply the position operator x_axis (diagonal on the grid).

    Args:
        phi: Grid state
        axis: Coordinate axis

    Returns:
        Unnormalized vector x_axis phi, with boundary flags in metadata
    """
    x = phi.grid.coordinates()[axis]
    return _flagged(phi, x * phi.amplitudes)


def apply_momentum(phi: StateVector, axis: int = 0, hbar: float = 1.0) -> StateVector:
    """
    Apply the momentum operator -i hbar d/dx_axis spectrally.

    Args:
        phi: Grid state
        axis: Coordinate axis
        hbar: Reduced Planck constant

    Returns:
        Unnormalized vector p_axis phi, with boundary flags in metadata
    """
    k = phi.grid.wavevectors()[axis]
    spectrum = np.fft.fftn(phi.amplitudes)
    return _flagged(phi, np.fft.ifftn(hbar * k * spectrum))


def _kinetic_symbol(grid: GridSpec, mass: float, hbar: float) -> np.ndarray:
    k2 = sum(k**2 for k in grid.wavevectors())
    return (hbar**2) * k2 / (2.0 * mass)


def apply_kinetic(phi: StateVector, mass: float = 1.0, hbar: float = 1.0) -> StateVector:
    """
    Apply the kinetic operator -hbar**2 / 2m Laplacian spectrally.

    Args:
        phi: Grid state
        mass: Particle mass
        hbar: Reduced Planck constant

    Returns:
        Unnormalized vector T phi, with boundary flags in metadata
    """
    symbol = _kinetic_symbol(phi.grid, mass, hbar)
    return _flagged(phi, np.fft.ifftn(symbol * np.fft.fftn(phi.amplitudes)))


def apply_hamiltonian(phi: StateVector, h: HamiltonianSpec) -> StateVector:
    """
    Apply h = p**2 / 2m + V.

    Args:
        phi: Grid state
        h: Hamiltonian specification

    Returns:
        Unnormalized vector h phi, with boundary flags in metadata
    """
    kinetic = apply_kinetic(phi, h.mass, h.hbar)
    potential = h.potential.values(phi.grid) * phi.amplitudes
    return phi.with_amplitudes(
        h.scale * (kinetic.amplitudes + potential), **kinetic.metadata
    )


def expectation(phi: StateVector, op_phi: StateVector) -> float:
    """
    Expectation value (phi, A phi) of a Hermitian operator.

    Args:
        phi: Unit state
        op_phi: The vector A phi

    Returns:
        Real part of the inner product
    """
    return inner_product(phi, op_phi).real


class SplitStepPropagator:
    """
    Strang split-step Fourier propagator for a grid Hamiltonian.

    One step applies exp(-i V dt / 2 hbar), the kinetic phase in
    wave-number space, then exp(-i V dt / 2 hbar) again, which is second
    order in dt and exactly unitary on the grid.
    """

    def __init__(
        self,
        h: HamiltonianSpec,
        grid: GridSpec,
        dt: float,
        logger: SimulationLogger = NullLogger(),
    ) -> None:
        """
        Initialize the propagator and precompute the phase factors.

        Args:
            h: Hamiltonian specification
            grid: Grid the states live on
            dt: Time step (may be negative for backward propagation)
            logger: Logger for per-step events (defaults to NullLogger)

        Raises:
            ValueError: If dt is zero or not finite
        """
        if dt == 0 or not np.isfinite(dt):
            raise ValueError(f"dt must be finite and nonzero, got {dt}")

        self.h = h
        """Hamiltonian being integrated."""

        self.grid = grid
        """Grid the propagator acts on."""

        self.dt = float(dt)
        """Time step."""

        self._logger = logger
        self._exp_potential = np.exp(
            -0.5j * (dt / h.hbar) * h.scale * h.potential.values(grid)
        )
        self._exp_kinetic = np.exp(
            -1j * (dt / h.hbar) * h.scale * _kinetic_symbol(grid, h.mass, h.hbar)
        )

    def step(self, amplitudes: np.ndarray) -> np.ndarray:
        """
        Advance raw amplitudes by one time step.

        Args:
            amplitudes: Complex array with the grid shape

        Returns:
            Propagated amplitudes
        """
        psi_k = np.fft.fftn(amplitudes * self._exp_potential)
        return np.fft.ifftn(psi_k * self._exp_kinetic) * self._exp_potential

    def __call__(self, phi: StateVector, n_steps: int = 1) -> StateVector:
        """
        Advance a state by ``n_steps`` time steps.

        Args:
            phi: Grid state
            n_steps: Number of steps

        Returns:
            Propagated state, with boundary flags of the final state in metadata

        Raises:
            GridMismatchError: If the state lives on another grid
            ValueError: If n_steps is negative
        """
        if phi.grid != self.grid:
            raise GridMismatchError(f"grid mismatch: {phi.grid} vs {self.grid}")
        if n_steps < 0:
            raise ValueError(f"n_steps must be non-negative, got {n_steps}")

        amplitudes = phi.amplitudes
        for k in range(n_steps):
            amplitudes = self.step(amplitudes)
            log_event(
                self._logger,
                SimulationEvent.STEP,
                type(self).__name__,
                step=k + 1,
                t=(k + 1) * self.dt,
            )
        result = phi.with_amplitudes(amplitudes)
        weight = boundary_weight(result)
        if weight > BOUNDARY_TOL:
            log_event(
                self._logger,
                SimulationEvent.WARNING,
                type(self).__name__,
                reason="boundary",
                boundary_weight=weight,
            )
        return result.with_amplitudes(
            amplitudes, boundary_weight=weight, boundary_warning=weight > BOUNDARY_TOL
        )


def evolve_unitary(
    phi: StateVector,
    h: HamiltonianSpec,
    dt: float,
    n_steps: int = 1,
    logger: SimulationLogger = NullLogger(),
) -> StateVector:
    """
    Apply exp(-i h dt / hbar) ``n_steps`` times by split-step Fourier.

    Args:
        phi: Grid state
        h: Hamiltonian specification
        dt: Time step
        n_steps: Number of steps
        logger: Logger for per-step events (defaults to NullLogger)

    Returns:
        Propagated state
    """
    return SplitStepPropagator(h, phi.grid, dt, logger)(phi, n_steps)


def check_hermitian(matrix: np.ndarray, tol: float = HERMITIAN_TOL) -> None:
    """
    Reject matrices that are not Hermitian within tolerance.

    Args:
        matrix: Square matrix, or a stack of square matrices
        tol: Relative tolerance

    Raises:
        NonHermitianError: If the matrix is not square or not Hermitian
    """
    matrix = np.asarray(matrix)
    if matrix.ndim < 2 or matrix.shape[-1] != matrix.shape[-2]:
        raise NonHermitianError(f"expected a square matrix, got shape {matrix.shape}")
    scale = max(1.0, float(np.max(np.abs(matrix)))) if matrix.size else 1.0
    defect = float(np.max(np.abs(matrix - np.conj(np.swapaxes(matrix, -1, -2)))))
    if defect > tol * scale:
        raise NonHermitianError(
            f"matrix is not Hermitian: max |H - H^dagger| = {defect:.3e}"
        )


def evolve_dense(
    phi: np.ndarray, hamiltonian: np.ndarray, dt: float, hbar: float = 1.0
) -> np.ndarray:
    """
    Apply exp(-i H dt / hbar) to a vector via eigendecomposition.

    Args:
        phi: Complex vector of length N
        hamiltonian: Hermitian N x N matrix
        dt: Time step
        hbar: Reduced Planck constant

    Returns:
        Propagated vector

    Raises:
        NonHermitianError: If H is not Hermitian within 1e-12
        ValueError: If dimensions do not match
    """
    phi = np.asarray(phi, dtype=complex)
    check_hermitian(hamiltonian)
    if hamiltonian.shape[0] != phi.shape[0]:
        raise ValueError(
            f"matrix of size {hamiltonian.shape[0]} cannot act on a vector of length {phi.shape[0]}"
        )
    energies, vectors = scipy.linalg.eigh(hamiltonian)
    phases = np.exp(-1j * energies * dt / hbar)
    return vectors @ (phases * (vectors.conj().T @ phi))


def evolve_dense_batch(
    phis: np.ndarray, hamiltonians: np.ndarray, dt: float, hbar: float = 1.0
) -> np.ndarray:
    """
    Batched :func:`evolve_dense` over independent trials.

    Args:
        phis: Complex array of shape (B, N)
        hamiltonians: Hermitian stack of shape (B, N, N)
        dt: Time step
        hbar: Reduced Planck constant

    Returns:
        Propagated vectors, shape (B, N)

    Raises:
        NonHermitianError: If any matrix is not Hermitian within 1e-12
    """
    check_hermitian(hamiltonians)
    energies, vectors = np.linalg.eigh(hamiltonians)
    coeffs = np.einsum("bji,bj->bi", vectors.conj(), phis)
    coeffs *= np.exp(-1j * energies * dt / hbar)
    return np.einsum("bij,bj->bi", vectors, coeffs)


def hamiltonian_matrix(h: HamiltonianSpec, grid: GridSpec, max_size: int = 4096) -> np.ndarray:
    """
    Dense matrix of the grid Hamiltonian in the orthonormal site basis.

    Used as the exact reference for split-step convergence studies.

    Args:
        h: Hamiltonian specification
        grid: Grid
        max_size: Largest accepted number of sites

    Returns:
        Hermitian matrix of size N**d

    Raises:
        ValueError: If the grid exceeds max_size sites
    """
    if grid.size > max_size:
        raise ValueError(f"dense Hamiltonian limited to {max_size} sites, got {grid.size}")
    columns = np.empty((grid.size, grid.size), dtype=complex)
    delta = np.zeros(grid.size, dtype=complex)
    for j in range(grid.size):
        delta[j] = 1.0
        column = apply_hamiltonian(StateVector(delta.reshape(grid.shape), grid), h)
        columns[:, j] = column.amplitudes.ravel()
        delta[j] = 0.0
    return 0.5 * (columns + columns.conj().T)


def dense_reference(phi: StateVector, h: HamiltonianSpec, dt: float) -> StateVector:
    """
    Exact one-step propagation of a grid state by the dense Hamiltonian.

    Args:
        phi: Grid state
        h: Hamiltonian specification
        dt: Time step

    Returns:
        exp(-i h dt / hbar) phi computed by eigendecomposition
    """
    coefficients = evolve_dense(phi.coefficients(), hamiltonian_matrix(h, phi.grid), dt, h.hbar)
    return StateVector.from_coefficients(coefficients, phi.grid)


def mean_position(phi: StateVector) -> np.ndarray:
    """
    Position expectation vector of a unit state.

    Args:
        phi: Unit grid state

    Returns:
        Array of (phi, x_alpha phi) for every axis
    """
    density = np.abs(phi.amplitudes) ** 2 * phi.grid.cell_volume
    return np.array([float(np.sum(x * density)) for x in phi.grid.coordinates()])


def mean_momentum(phi: StateVector, hbar: float = 1.0) -> np.ndarray:
    """
    Momentum expectation vector of a unit state, from its spectrum.

    Args:
        phi: Unit grid state
        hbar: Reduced Planck constant

    Returns:
        Array of (phi, p_alpha phi) for every axis
    """
    spectrum = np.abs(np.fft.fftn(phi.amplitudes)) ** 2
    spectrum /= np.sum(spectrum)
    return np.array([float(hbar * np.sum(k * spectrum)) for k in phi.grid.wavevectors()])
