"""
Core protocol interfaces for the state-geometry experiments library.

This module defines the abstract interfaces (protocols) for the two
pluggable component families: external potentials entering the
Hamiltonian, and named experiments run by the command-line runner.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["Potential", "Experiment"]

from abc import abstractmethod
from typing import TYPE_CHECKING, Protocol, runtime_checkable

import numpy as np

from .types import GridSpec, SimulationLogger

if TYPE_CHECKING:
    from .config import ExperimentConfig
    from .experiment import ExperimentResult


@runtime_checkable
class Potential(Protocol):
    """
    Protocol for time-independent external potentials V(x).

    A potential knows its values on a grid (used by the split-step
    propagator and by the Hamiltonian operator) and its gradient at a
    point (used by the Newtonian comparator).
    """

    @property
    @abstractmethod
    def degree(self) -> int:
        """
        Polynomial degree of V, or -1 for non-polynomial potentials.

        Ehrenfest's equations close exactly for degree <= 2.
        """
        ...

    @abstractmethod
    def values(self, grid: GridSpec) -> np.ndarray:
        """
        Sample the potential on every site of a grid.

        Args:
            grid: Target grid

        Returns:
            Real array with the grid shape

        Raises:
            GridMismatchError: If the potential is tied to another grid
        """
        ...

    @abstractmethod
    def value_at(self, a: np.ndarray) -> float:
        """
        Evaluate V at a single point.

        Args:
            a: Position vector

        Returns:
            Potential energy at ``a``
        """
        ...

    @abstractmethod
    def gradient(self, a: np.ndarray) -> np.ndarray:
        """
        Evaluate grad V at a single point.

        Args:
            a: Position vector

        Returns:
            Gradient vector; the classical force is its negative
        """
        ...


@runtime_checkable
class Experiment(Protocol):
    """
    Protocol for a named, seeded experiment.

    An experiment reads its parameters from an ExperimentConfig, runs,
    and returns an ExperimentResult holding tables, reports and the
    acceptance criteria it evaluated. It does not touch the filesystem;
    the runner persists the result.
    """

    name: str
    """Experiment name used on the command line."""

    @abstractmethod
    def run(
        self, config: "ExperimentConfig", logger: SimulationLogger
    ) -> "ExperimentResult":
        """
        Run the experiment.

        Args:
            config: Validated configuration
            logger: Destination for simulation events

        Returns:
            Collected tables, reports and criteria
        """
        ...
