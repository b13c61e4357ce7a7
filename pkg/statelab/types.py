"""
Data types and protocols for the state-geometry experiments library.

This module defines the core data structures used throughout the library:
the spatial grid that discretizes L2(R^d), grid states, packet parameters,
classical phase points, and the event-logging protocol shared by every
long-running component.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "GridSpec",
    "StateVector",
    "PacketParams",
    "ClassicalState",
    "SimulationEvent",
    "SimulationLog",
    "SimulationLogger",
]

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Protocol, Sequence, Tuple, Union, runtime_checkable

import numpy as np

VectorLike = Union[float, Sequence[float], np.ndarray]
"""A scalar (one-dimensional case) or a sequence of per-axis values."""

MAX_GRID_SITES = 2**24
"""Default memory budget for the total number of grid sites."""


def _as_vector(value: VectorLike) -> np.ndarray:
    return np.atleast_1d(np.asarray(value, dtype=float)).copy()


@dataclass(frozen=True)
class GridSpec:
    """
    Uniform periodic grid discretizing L2(R^d).

    The grid has ``points_per_axis`` sites per axis on the interval
    ``[-extent/2, extent/2)``. Operators built on it are periodic
    (discrete Fourier transform), so states must stay away from the edges.
    """

    dim: int = 1
    """Spatial dimension d, one of 1, 2, 3."""

    points_per_axis: int = 512
    """Number of sites N per axis; a power of two, at least 16."""

    extent: float = 40.0
    """Length L of each axis (meters in SI mode)."""

    max_sites: int = MAX_GRID_SITES
    """Memory budget for the total number of sites N**d."""

    def __post_init__(self) -> None:
        if self.dim not in (1, 2, 3):
            raise ValueError(f"dim must be 1, 2 or 3, got {self.dim}")
        n = self.points_per_axis
        if n < 16 or n & (n - 1) != 0:
            raise ValueError(
                f"points_per_axis must be a power of two >= 16, got {n}"
            )
        if not self.extent > 0:
            raise ValueError(f"extent must be positive, got {self.extent}")
        if n**self.dim > self.max_sites:
            raise ValueError(
                f"grid of {n}**{self.dim} sites exceeds the budget of {self.max_sites}"
            )

    @classmethod
    def for_packet(
        cls, sigma: float = 1.0, dim: int = 1, points_per_axis: int = 512
    ) -> "GridSpec":
        """
        Default grid for a packet of width sigma: N = 512, L = 40 sigma.

        Args:
            sigma: Packet width
            dim: Spatial dimension
            points_per_axis: Number of sites per axis

        Returns:
            A grid scaled to the packet width
        """
        return cls(dim=dim, points_per_axis=points_per_axis, extent=40.0 * sigma)

    @property
    def spacing(self) -> float:
        """Grid spacing dx = L / N."""
        return self.extent / self.points_per_axis

    @property
    def cell_volume(self) -> float:
        """Quadrature weight dx**d of a single site."""
        return self.spacing**self.dim

    @property
    def shape(self) -> Tuple[int, ...]:
        """Array shape of a grid state."""
        return (self.points_per_axis,) * self.dim

    @property
    def size(self) -> int:
        """Total number of sites N**d."""
        return self.points_per_axis**self.dim

    @property
    def axis(self) -> np.ndarray:
        """Coordinates of the sites along one axis."""
        n = self.points_per_axis
        return (np.arange(n) - n // 2) * self.spacing

    @property
    def wavenumbers(self) -> np.ndarray:
        """Angular wave numbers k along one axis, in FFT order."""
        return 2.0 * np.pi * np.fft.fftfreq(self.points_per_axis, d=self.spacing)

    def coordinates(self) -> List[np.ndarray]:
        """
        Per-axis coordinate arrays broadcast to the grid shape.

        Returns:
            List of d arrays, the alpha-th holding x_alpha at every site
        """
        return list(np.meshgrid(*([self.axis] * self.dim), indexing="ij"))

    def wavevectors(self) -> List[np.ndarray]:
        """
        Per-axis wave-number arrays broadcast to the grid shape (FFT order).

        Returns:
            List of d arrays, the alpha-th holding k_alpha at every mode
        """
        return list(np.meshgrid(*([self.wavenumbers] * self.dim), indexing="ij"))

    def margin_ok(self, center: VectorLike, reach: float) -> bool:
        """
        Check that a ball of radius ``reach`` around ``center`` fits the grid.

        Args:
            center: Per-axis center
            reach: Required clearance from the boundary in every axis

        Returns:
            True when |center_alpha| + reach <= L/2 on every axis
        """
        c = _as_vector(center)
        return bool(np.all(np.abs(c) + reach <= self.extent / 2.0))


@dataclass(frozen=True)
class StateVector:
    """
    Complex amplitudes of a state on a grid.

    Unit-normalized states satisfy sum |phi_i|**2 * dx**d = 1. Results of
    operator application are also returned as StateVector but are not
    renormalized.
    """

    amplitudes: np.ndarray
    """Complex array with the grid shape."""

    grid: GridSpec
    """Grid the amplitudes live on."""

    metadata: Dict[str, Any] = field(default_factory=dict, compare=False)
    """Flags recorded by the operation that produced the vector."""

    def __post_init__(self) -> None:
        amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if amplitudes.shape != self.grid.shape:
            raise ValueError(
                f"amplitudes shape {amplitudes.shape} does not match grid shape {self.grid.shape}"
            )
        object.__setattr__(self, "amplitudes", amplitudes)

    def with_amplitudes(self, amplitudes: np.ndarray, **metadata: Any) -> "StateVector":
        """
        Build a vector on the same grid with new amplitudes.

        Args:
            amplitudes: New complex amplitudes
            **metadata: Flags to attach to the new vector

        Returns:
            New StateVector on the same grid
        """
        return StateVector(amplitudes, self.grid, dict(metadata))

    def coefficients(self) -> np.ndarray:
        """
        Flattened coefficients in the orthonormal site basis.

        The site basis vectors are delta_j / sqrt(dx**d); the coefficients
        have unit Euclidean norm exactly when the state is unit-normalized.

        Returns:
            Complex vector of length N**d
        """
        return self.amplitudes.ravel() * np.sqrt(self.grid.cell_volume)

    @classmethod
    def from_coefficients(cls, coefficients: np.ndarray, grid: GridSpec) -> "StateVector":
        """
        Inverse of :meth:`coefficients`.

        Args:
            coefficients: Complex vector of length N**d
            grid: Target grid

        Returns:
            StateVector with amplitudes coefficients / sqrt(dx**d)
        """
        amplitudes = np.asarray(coefficients, dtype=complex).reshape(grid.shape)
        return cls(amplitudes / np.sqrt(grid.cell_volume), grid)


@dataclass(frozen=True)
class PacketParams:
    """
    Coordinates of a Gaussian packet g_{a,sigma} exp(i p x / hbar).

    Scalars are accepted for the one-dimensional case and promoted to
    length-one vectors.
    """

    a: VectorLike = 0.0
    """Packet center (position vector)."""

    p: VectorLike = 0.0
    """Packet momentum vector."""

    sigma: float = 1.0
    """Packet width; |g|**2 has variance sigma**2 per axis."""

    mass: float = 1.0
    """Particle mass."""

    hbar: float = 1.0
    """Reduced Planck constant in the chosen units."""

    def __post_init__(self) -> None:
        a = _as_vector(self.a)
        p = _as_vector(self.p)
        if a.shape != p.shape:
            raise ValueError(
                f"position and momentum must have the same dimension, got {a.size} and {p.size}"
            )
        if not self.sigma > 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if not self.mass > 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "p", p)

    @property
    def dim(self) -> int:
        """Spatial dimension of the packet."""
        return int(np.asarray(self.a).size)

    @property
    def center(self) -> np.ndarray:
        """Packet center as an array."""
        return np.asarray(self.a)

    @property
    def momentum(self) -> np.ndarray:
        """Packet momentum as an array."""
        return np.asarray(self.p)

    def moved(self, a: VectorLike | None = None, p: VectorLike | None = None) -> "PacketParams":
        """
        Copy with a new center and/or momentum.

        Args:
            a: New center, or None to keep the current one
            p: New momentum, or None to keep the current one

        Returns:
            New PacketParams
        """
        return PacketParams(
            a=self.center if a is None else a,
            p=self.momentum if p is None else p,
            sigma=self.sigma,
            mass=self.mass,
            hbar=self.hbar,
        )


@dataclass(frozen=True)
class ClassicalState:
    """A point (a, p) of the classical phase space at time t."""

    a: VectorLike = 0.0
    """Position."""

    p: VectorLike = 0.0
    """Momentum."""

    t: float = 0.0
    """Time."""

    def __post_init__(self) -> None:
        a = _as_vector(self.a)
        p = _as_vector(self.p)
        if a.shape != p.shape:
            raise ValueError(
                f"position and momentum must have the same dimension, got {a.size} and {p.size}"
            )
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(p)) and np.isfinite(self.t)):
            raise ValueError("classical state must be finite")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "p", p)


class SimulationEvent(str, Enum):
    """
    Events emitted by simulations and experiments.

    These events are logged by walks, propagators and the experiment
    runner for monitoring, debugging, and analysis purposes.
    """

    TRIAL_STARTED = "trial_started"
    """A Monte Carlo trial (or chunk of trials) has started."""

    STEP = "step"
    """A propagation or walk step has completed."""

    TRIAL_FINISHED = "trial_finished"
    """A Monte Carlo trial (or chunk of trials) has finished."""

    CHECK_PASSED = "check_passed"
    """An acceptance criterion was met."""

    CHECK_FAILED = "check_failed"
    """An acceptance criterion was not met."""

    WARNING = "warning"
    """A non-fatal condition was recorded (boundary proximity, zero hits, ...)."""

    ARTIFACT_WRITTEN = "artifact_written"
    """A result file was written to disk."""

    ERROR = "error"
    """An error interrupted a computation."""


@dataclass
class SimulationLog:
    """
    Log entry for a simulation event.

    Contains the event type, the emitting component and additional
    event-specific context.
    """

    timestamp: float
    """Time of the event in seconds since epoch."""

    event: SimulationEvent
    """Type of simulation event."""

    source: str
    """Name of the component that emitted the event."""

    data: Dict[str, Any]
    """Additional event-specific data as key-value pairs."""


@runtime_checkable
class SimulationLogger(Protocol):
    """
    Protocol for logging simulation events.

    Implementations decide where the entries go: memory, console,
    a DataFrame, or nowhere.
    """

    def log(self, log_entry: SimulationLog) -> None:
        """
        Log a simulation event.

        Args:
            log_entry: The simulation log entry to record
        """
        ...
