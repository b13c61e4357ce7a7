"""
Grid discretization of L2(R^d).

This package provides the Hilbert-space layer every other module builds
on: inner products, position/momentum/Hamiltonian operators, external
potentials, and the two unitary time-stepping regimes.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__description__ = "Grid Hilbert space, operators and propagators"

from .hilbert import (
    SplitStepPropagator as SplitStepPropagator,
    apply_hamiltonian as apply_hamiltonian,
    apply_kinetic as apply_kinetic,
    apply_momentum as apply_momentum,
    apply_position as apply_position,
    boundary_weight as boundary_weight,
    check_hermitian as check_hermitian,
    dense_reference as dense_reference,
    evolve_dense as evolve_dense,
    evolve_dense_batch as evolve_dense_batch,
    evolve_unitary as evolve_unitary,
    expectation as expectation,
    hamiltonian_matrix as hamiltonian_matrix,
    inner_product as inner_product,
    mean_momentum as mean_momentum,
    mean_position as mean_position,
    norm as norm,
    normalize as normalize,
    real_metric as real_metric,
)
from .potentials import (
    FreePotential as FreePotential,
    HamiltonianSpec as HamiltonianSpec,
    HarmonicPotential as HarmonicPotential,
    LinearPotential as LinearPotential,
    TabulatedPotential as TabulatedPotential,
)

__all__ = [
    "SplitStepPropagator",
    "apply_hamiltonian",
    "apply_kinetic",
    "apply_momentum",
    "apply_position",
    "boundary_weight",
    "check_hermitian",
    "dense_reference",
    "evolve_dense",
    "evolve_dense_batch",
    "evolve_unitary",
    "expectation",
    "hamiltonian_matrix",
    "inner_product",
    "mean_momentum",
    "mean_position",
    "norm",
    "normalize",
    "real_metric",
    "FreePotential",
    "HamiltonianSpec",
    "HarmonicPotential",
    "LinearPotential",
    "TabulatedPotential",
]
