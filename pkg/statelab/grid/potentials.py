"""
External potentials and the Hamiltonian specification.

The Hamiltonian is h = p^2 / 2m + V(x). Potentials implement the
:class:`~statelab.interfaces.Potential` protocol so the grid operators,
the split-step propagator and the Newtonian comparator can share them.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "FreePotential",
    "LinearPotential",
    "HarmonicPotential",
    "TabulatedPotential",
    "HamiltonianSpec",
]

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd

from ..errors import GridMismatchError
from ..interfaces import Potential
from ..types import GridSpec, VectorLike


class FreePotential(Potential):
    """Zero potential, V = 0."""

    @property
    def degree(self) -> int:
        return 0

    def values(self, grid: GridSpec) -> np.ndarray:
        return np.zeros(grid.shape)

    def value_at(self, a: np.ndarray) -> float:
        return 0.0

    def gradient(self, a: np.ndarray) -> np.ndarray:
        return np.zeros_like(np.atleast_1d(np.asarray(a, dtype=float)))

    def packet_expectation(self, center: VectorLike, sigma: float) -> float:
        """
        Expectation of V in a Gaussian packet.

        Args:
            center: Packet center
            sigma: Packet width

        Returns:
            Zero
        """
        return 0.0

    def __repr__(self) -> str:
        return "FreePotential()"


class LinearPotential(Potential):
    """
    Uniform force field, V(x) = -f . x.

    The classical force is the constant vector f everywhere.
    """

    def __init__(self, force: VectorLike) -> None:
        """
        Initialize a linear potential.

        Args:
            force: Constant force vector f

        Raises:
            ValueError: If the force is not finite
        """
        self.force = np.atleast_1d(np.asarray(force, dtype=float))
        """Constant force vector."""

        if not np.all(np.isfinite(self.force)):
            raise ValueError(f"force must be finite, got {self.force}")

    @property
    def degree(self) -> int:
        return 1

    def _check_dim(self, dim: int) -> None:
        if self.force.size != dim:
            raise GridMismatchError(
                f"force has {self.force.size} components, expected {dim}"
            )

    def values(self, grid: GridSpec) -> np.ndarray:
        self._check_dim(grid.dim)
        return -sum(f * x for f, x in zip(self.force, grid.coordinates()))

    def value_at(self, a: np.ndarray) -> float:
        a = np.atleast_1d(np.asarray(a, dtype=float))
        self._check_dim(a.size)
        return float(-np.dot(self.force, a))

    def gradient(self, a: np.ndarray) -> np.ndarray:
        a = np.atleast_1d(np.asarray(a, dtype=float))
        self._check_dim(a.size)
        return -self.force.copy()

    def packet_expectation(self, center: VectorLike, sigma: float) -> float:
        """
        Expectation of V in a Gaussian packet, -f . a.

        Args:
            center: Packet center
            sigma: Packet width

        Returns:
            Expected potential energy
        """
        return self.value_at(np.asarray(center))

    def __repr__(self) -> str:
        return f"LinearPotential(force={self.force.tolist()})"


class HarmonicPotential(Potential):
    """Isotropic oscillator centered at the origin, V(x) = k |x|^2 / 2."""

    def __init__(self, stiffness: float) -> None:
        """
        Initialize a harmonic potential.

        Args:
            stiffness: Spring constant k

        Raises:
            ValueError: If stiffness is not positive
        """
        if not stiffness > 0:
            raise ValueError(f"stiffness must be positive, got {stiffness}")

        self.stiffness = float(stiffness)
        """Spring constant k."""

    @property
    def degree(self) -> int:
        return 2

    def values(self, grid: GridSpec) -> np.ndarray:
        return 0.5 * self.stiffness * sum(x**2 for x in grid.coordinates())

    def value_at(self, a: np.ndarray) -> float:
        a = np.atleast_1d(np.asarray(a, dtype=float))
        return float(0.5 * self.stiffness * np.dot(a, a))

    def gradient(self, a: np.ndarray) -> np.ndarray:
        return self.stiffness * np.atleast_1d(np.asarray(a, dtype=float))

    def packet_expectation(self, center: VectorLike, sigma: float) -> float:
        """
        Expectation of V in a Gaussian packet, k (|a|^2 + d sigma^2) / 2.

        Args:
            center: Packet center
            sigma: Packet width

        Returns:
            Expected potential energy
        """
        a = np.atleast_1d(np.asarray(center, dtype=float))
        return float(0.5 * self.stiffness * (np.dot(a, a) + a.size * sigma**2))

    def angular_frequency(self, mass: float) -> float:
        """
        Classical angular frequency sqrt(k / m).

        Args:
            mass: Particle mass

        Returns:
            Angular frequency
        """
        return float(np.sqrt(self.stiffness / mass))

    def __repr__(self) -> str:
        return f"HarmonicPotential(stiffness={self.stiffness})"


class TabulatedPotential(Potential):
    """
    Potential given by its samples on a fixed grid.

    Point evaluation uses the nearest site; the gradient uses centered
    differences of the samples around that site.
    """

    def __init__(self, samples: np.ndarray, grid: GridSpec) -> None:
        """
        Initialize a tabulated potential.

        Args:
            samples: Real array with the grid shape
            grid: Grid the samples belong to

        Raises:
            ValueError: If the samples are complex, non-finite or misshaped
        """
        samples = np.asarray(samples)
        if np.iscomplexobj(samples):
            if np.any(np.abs(samples.imag) > 0):
                raise ValueError("tabulated potential must be real-valued")
            samples = samples.real
        samples = samples.astype(float)
        if samples.shape != grid.shape:
            raise ValueError(
                f"samples shape {samples.shape} does not match grid shape {grid.shape}"
            )
        if not np.all(np.isfinite(samples)):
            raise ValueError("tabulated potential must be finite")

        self.samples = samples
        """Potential values on the grid sites."""

        self.grid = grid
        """Grid the samples are tied to."""

    @classmethod
    def from_csv(cls, path: Union[str, Path], grid: GridSpec) -> "TabulatedPotential":
        """
        Load samples from a CSV file with a column ``V``.

        Rows follow the flattened (row-major) grid order.

        Args:
            path: CSV file
            grid: Grid the samples belong to

        Returns:
            Tabulated potential on ``grid``

        Raises:
            ValueError: If the column is missing or has the wrong length
        """
        frame = pd.read_csv(path)
        if "V" not in frame.columns:
            raise ValueError(f"{path}: expected a column named V")
        values = frame["V"].to_numpy(dtype=float)
        if values.size != grid.size:
            raise ValueError(f"{path}: {values.size} samples for a grid of {grid.size} sites")
        return cls(values.reshape(grid.shape), grid)

    @property
    def degree(self) -> int:
        return -1

    def values(self, grid: GridSpec) -> np.ndarray:
        if grid != self.grid:
            raise GridMismatchError("tabulated potential used on a different grid")
        return self.samples

    def _nearest(self, a: np.ndarray) -> tuple:
        a = np.atleast_1d(np.asarray(a, dtype=float))
        if a.size != self.grid.dim:
            raise GridMismatchError(
                f"point has {a.size} components, expected {self.grid.dim}"
            )
        n = self.grid.points_per_axis
        idx = np.rint(a / self.grid.spacing).astype(int) + n // 2
        return tuple(int(i) % n for i in idx)

    def value_at(self, a: np.ndarray) -> float:
        return float(self.samples[self._nearest(a)])

    def gradient(self, a: np.ndarray) -> np.ndarray:
        index = self._nearest(a)
        grad = np.empty(self.grid.dim)
        # periodic centered difference
        for axis in range(self.grid.dim):
            fwd = np.roll(self.samples, -1, axis=axis)[index]
            bwd = np.roll(self.samples, 1, axis=axis)[index]
            grad[axis] = (fwd - bwd) / (2.0 * self.grid.spacing)
        return grad

    def __repr__(self) -> str:
        return f"TabulatedPotential(grid={self.grid})"


@dataclass(frozen=True)
class HamiltonianSpec:
    """
    Hamiltonian h = -hbar^2 / 2m Laplacian + V(x).

    Units are the caller's: natural (hbar = m = 1) for geometry and
    dynamics, SI for macroscopic estimates.
    """

    potential: Potential = field(default_factory=FreePotential)
    """External potential V."""

    mass: float = 1.0
    """Particle mass m."""

    hbar: float = 1.0
    """Reduced Planck constant."""

    scale: float = 1.0
    """Overall multiplier of the Hamiltonian (used to test linearity)."""

    label: Optional[str] = None
    """Optional human-readable name for reports."""

    def __post_init__(self) -> None:
        if not self.mass > 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if not isinstance(self.potential, Potential):
            raise TypeError(
                f"potential must implement the Potential protocol, got {type(self.potential).__name__}"
            )

    def force(self, a: np.ndarray) -> np.ndarray:
        """
        Classical force -grad V at a point, including the overall scale.

        Args:
            a: Position vector

        Returns:
            Force vector
        """
        return -self.scale * self.potential.gradient(a)

    def classical_energy(self, a: np.ndarray, p: np.ndarray) -> float:
        """
        Classical energy |p|^2 / 2m + V(a), including the overall scale.

        Args:
            a: Position vector
            p: Momentum vector

        Returns:
            Energy
        """
        p = np.atleast_1d(np.asarray(p, dtype=float))
        return float(
            self.scale * (np.dot(p, p) / (2.0 * self.mass) + self.potential.value_at(a))
        )

    def describe(self) -> str:
        """Short name used in tables."""
        return self.label or repr(self.potential)
