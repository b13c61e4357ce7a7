"""
Exception types for the state-geometry experiments library.

All exceptions derive from ``ValueError`` so callers that only care about
invalid input can keep catching the builtin type.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "GridMismatchError",
    "MarginError",
    "NonHermitianError",
    "DegenerateDirectionError",
    "InsufficientSamplesError",
    "ConfigError",
]


from typing import List, Optional


class GridMismatchError(ValueError):
    """Raised when two states or vectors live on different grids."""


class MarginError(ValueError):
    """Raised when a packet or a walk comes too close to the grid boundary."""


class NonHermitianError(ValueError):
    """Raised when a dense Hamiltonian is not Hermitian within tolerance."""


class DegenerateDirectionError(ValueError):
    """Raised when a tangent direction has (numerically) zero norm."""


class InsufficientSamplesError(ValueError):
    """Raised when a statistical routine gets fewer samples than it needs."""


class ConfigError(ValueError):
    """
    Raised when an experiment configuration cannot be loaded or validated.

    Attributes:
        diagnostics: Human-readable diagnostics, one per problem found
    """

    def __init__(self, message: str, diagnostics: Optional[List[str]] = None) -> None:
        super().__init__(message)
        self.diagnostics = diagnostics or []
        """Human-readable diagnostics, one per problem found."""
