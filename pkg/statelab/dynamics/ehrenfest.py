"""
Commutator expectations and Ehrenfest projections at packet states.

Both reduce, at a packet, to the Poisson brackets of the classical
Hamiltonian: {a, h} = p / m and {p, h} = -grad V.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "Observable",
    "commutator_expectation",
    "ehrenfest_projections",
    "poisson_bracket",
]

from enum import Enum
from typing import Optional, Tuple

import numpy as np

from ..grid.hilbert import (
    apply_hamiltonian,
    apply_momentum,
    apply_position,
    inner_product,
    mean_momentum,
    mean_position,
    real_metric,
)
from ..grid.potentials import HamiltonianSpec
from ..manifold.packets import make_packet
from ..types import GridSpec, PacketParams, StateVector
from .decomposition import velocity_state


class Observable(str, Enum):
    """Observables whose commutator with the Hamiltonian is evaluated."""

    POSITION = "position"
    MOMENTUM = "momentum"


def _apply(phi: StateVector, observable: Observable, axis: int, hbar: float) -> StateVector:
    if observable == Observable.POSITION:
        return apply_position(phi, axis)
    return apply_momentum(phi, axis, hbar)


def commutator_expectation(
    phi: StateVector, observable: Observable, h: HamiltonianSpec
) -> np.ndarray:
    """
    Grid value of (phi, (1 / i hbar) [A, h] phi) for every axis.

    Evaluated as ((A phi, h phi) - (phi, h A phi)) / (i hbar), with both
    operator products applied on the grid.

    Args:
        phi: Unit state
        observable: POSITION or MOMENTUM
        h: Hamiltonian specification

    Returns:
        Real vector with one entry per axis

    Raises:
        ValueError: If the observable is not recognized
    """
    observable = Observable(observable)
    h_phi = apply_hamiltonian(phi, h)
    values = np.empty(phi.grid.dim)
    for axis in range(phi.grid.dim):
        a_phi = _apply(phi, observable, axis, h.hbar)
        h_a_phi = apply_hamiltonian(a_phi, h)
        value = (inner_product(a_phi, h_phi) - inner_product(phi, h_a_phi)) / (1j * h.hbar)
        values[axis] = value.real
    return values


def poisson_bracket(
    observable: Observable, params: PacketParams, h: HamiltonianSpec
) -> np.ndarray:
    """
    Classical Poisson bracket {A, h} at the packet's phase point.

    Args:
        observable: POSITION or MOMENTUM
        params: Phase point
        h: Hamiltonian specification

    Returns:
        p / m for POSITION, -grad V(a) for MOMENTUM
    """
    observable = Observable(observable)
    if observable == Observable.POSITION:
        return h.scale * params.momentum / h.mass
    return h.force(params.center)


def ehrenfest_projections(
    params: PacketParams, h: HamiltonianSpec, grid: Optional[GridSpec] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Rates of change of the packet coordinates from the Schrodinger velocity.

    da/dt = 2 Re(d phi / dt, (x - <x>) phi) and
    dp/dt = 2 Re(d phi / dt, (p - <p>) phi), with the shifted vectors
    used unnormalized; with that convention the free packet gives
    exactly p / m.

    Args:
        params: Packet parameters (mass and hbar are taken from ``h``)
        h: Hamiltonian specification
        grid: Grid (defaults to N = 512, L = 40 sigma)

    Returns:
        (da/dt, dp/dt), one entry per axis each
    """
    params = PacketParams(
        a=params.center, p=params.momentum, sigma=params.sigma, mass=h.mass, hbar=h.hbar
    )
    grid = grid or GridSpec.for_packet(params.sigma, dim=params.dim)
    phi = make_packet(params, grid)
    velocity = velocity_state(phi, h)
    x_mean = mean_position(phi)
    p_mean = mean_momentum(phi, h.hbar)
    da_dt = np.empty(grid.dim)
    dp_dt = np.empty(grid.dim)
    for axis in range(grid.dim):
        x_perp = phi.with_amplitudes(
            apply_position(phi, axis).amplitudes - x_mean[axis] * phi.amplitudes
        )
        p_perp = phi.with_amplitudes(
            apply_momentum(phi, axis, h.hbar).amplitudes - p_mean[axis] * phi.amplitudes
        )
        da_dt[axis] = 2.0 * real_metric(velocity, x_perp)
        dp_dt[axis] = 2.0 * real_metric(velocity, p_perp)
    return da_dt, dp_dt
