"""
Schrodinger flow at packet states.

Velocity decomposition on the tangent frame, commutator and Ehrenfest
comparisons with Poisson brackets, and the Newtonian comparator.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__description__ = "Velocity decomposition, Ehrenfest checks and classical comparison"

from .classical import (
    ClassicalTrajectory as ClassicalTrajectory,
    ComparisonReport as ComparisonReport,
    newtonian_trajectory as newtonian_trajectory,
    quantum_classical_compare as quantum_classical_compare,
)
from .decomposition import (
    VelocityDecomposition as VelocityDecomposition,
    decompose_velocity as decompose_velocity,
    velocity_state as velocity_state,
)
from .ehrenfest import (
    Observable as Observable,
    commutator_expectation as commutator_expectation,
    ehrenfest_projections as ehrenfest_projections,
    poisson_bracket as poisson_bracket,
)

__all__ = [
    "ClassicalTrajectory",
    "ComparisonReport",
    "newtonian_trajectory",
    "quantum_classical_compare",
    "VelocityDecomposition",
    "decompose_velocity",
    "velocity_state",
    "Observable",
    "commutator_expectation",
    "ehrenfest_projections",
    "poisson_bracket",
]
