"""
Newtonian comparator and quantum/classical trajectory comparison.

The classical side integrates da/dt = p/m, dp/dt = -grad V with the
kick-drift-kick leapfrog; the quantum side propagates a packet with the
split-step propagator and tracks <x> and <p>.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "ClassicalTrajectory",
    "newtonian_trajectory",
    "ComparisonReport",
    "quantum_classical_compare",
]

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np
import pandas as pd

from ..grid.hilbert import SplitStepPropagator, mean_momentum, mean_position
from ..grid.potentials import HamiltonianSpec
from ..logger import NullLogger, log_event
from ..manifold.packets import make_packet
from ..types import (
    ClassicalState,
    GridSpec,
    PacketParams,
    SimulationEvent,
    SimulationLogger,
)


@dataclass(frozen=True)
class ClassicalTrajectory:
    """Sampled phase-space trajectory of a Newtonian integration."""

    times: np.ndarray
    """Sample times, shape (n_steps + 1,)."""

    positions: np.ndarray
    """Positions, shape (n_steps + 1, d)."""

    momenta: np.ndarray
    """Momenta, shape (n_steps + 1, d)."""

    def energies(self, h: HamiltonianSpec) -> np.ndarray:
        """
        Classical energy at every sample.

        Args:
            h: Hamiltonian the trajectory was integrated with

        Returns:
            Energies, shape (n_steps + 1,)
        """
        return np.array(
            [h.classical_energy(a, p) for a, p in zip(self.positions, self.momenta)]
        )

    def state(self, index: int) -> ClassicalState:
        """Phase point at a given sample index."""
        return ClassicalState(
            a=self.positions[index], p=self.momenta[index], t=float(self.times[index])
        )

    def to_frame(self) -> pd.DataFrame:
        """Trajectory as a DataFrame with columns t, a0.., p0.."""
        d = self.positions.shape[1]
        data: Dict[str, Any] = {"t": self.times}
        for axis in range(d):
            data[f"a{axis}"] = self.positions[:, axis]
        for axis in range(d):
            data[f"p{axis}"] = self.momenta[:, axis]
        return pd.DataFrame(data)


def newtonian_trajectory(
    c0: ClassicalState, h: HamiltonianSpec, dt: float, n_steps: int
) -> ClassicalTrajectory:
    """
    Integrate Newton's equations with the kick-drift-kick leapfrog.

    Args:
        c0: Initial phase point
        h: Hamiltonian specification (potential and mass)
        dt: Time step
        n_steps: Number of steps

    Returns:
        Trajectory sampled at every step

    Raises:
        ValueError: If dt is not positive or n_steps is negative
    """
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    if n_steps < 0:
        raise ValueError(f"n_steps must be non-negative, got {n_steps}")

    d = np.asarray(c0.a).size
    positions = np.empty((n_steps + 1, d))
    momenta = np.empty((n_steps + 1, d))
    a = np.asarray(c0.a, dtype=float).copy()
    p = np.asarray(c0.p, dtype=float).copy()
    positions[0], momenta[0] = a, p
    force = h.force(a)
    for k in range(1, n_steps + 1):
        p_half = p + 0.5 * dt * force
        a = a + dt * h.scale * p_half / h.mass
        force = h.force(a)
        p = p_half + 0.5 * dt * force
        positions[k], momenta[k] = a, p
    times = c0.t + dt * np.arange(n_steps + 1)
    return ClassicalTrajectory(times=times, positions=positions, momenta=momenta)


@dataclass(frozen=True)
class ComparisonReport:
    """Quantum expectations against the Newtonian trajectory over a horizon."""

    table: pd.DataFrame
    """Per-step table: t, x_quantum, x_classical, p_quantum, p_classical per axis."""

    max_position_deviation: float
    """max_t |<x>(t) - a(t)| over all axes."""

    max_momentum_deviation: float
    """max_t |<p>(t) - p(t)| over all axes."""

    tolerance: float
    """Position tolerance (the grid spacing)."""

    metadata: Dict[str, Any] = field(default_factory=dict)
    """Horizon, step size, potential and boundary flags."""

    @property
    def passed(self) -> bool:
        """Whether the position deviation stays within the tolerance."""
        return self.max_position_deviation < self.tolerance


def quantum_classical_compare(
    params: PacketParams,
    h: HamiltonianSpec,
    horizon: float,
    dt: float = 0.01,
    grid: Optional[GridSpec] = None,
    logger: SimulationLogger = NullLogger(),
) -> ComparisonReport:
    """
    Compare packet expectations with the Newtonian trajectory.

    The same time step is used on both sides, so for potentials of
    degree <= 2 the split-step expectations follow the leapfrog
    trajectory up to round-off and grid error.

    Args:
        params: Initial packet (mass and hbar are taken from ``h``)
        h: Hamiltonian specification
        horizon: Total time T
        dt: Time step
        grid: Grid (defaults to N = 512, L = 40 sigma)
        logger: Logger for events (defaults to NullLogger)

    Returns:
        Comparison table and maximum deviations

    Raises:
        ValueError: If horizon or dt is not positive
        MarginError: If the initial packet does not fit the grid
    """
    if not horizon > 0:
        raise ValueError(f"horizon must be positive, got {horizon}")
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")

    params = PacketParams(
        a=params.center, p=params.momentum, sigma=params.sigma, mass=h.mass, hbar=h.hbar
    )
    grid = grid or GridSpec.for_packet(params.sigma, dim=params.dim)
    n_steps = int(np.ceil(horizon / dt - 1e-9))
    phi = make_packet(params, grid)
    propagator = SplitStepPropagator(h, grid, dt)
    trajectory = newtonian_trajectory(
        ClassicalState(a=params.center, p=params.momentum), h, dt, n_steps
    )

    x_quantum = np.empty((n_steps + 1, grid.dim))
    p_quantum = np.empty((n_steps + 1, grid.dim))
    x_quantum[0], p_quantum[0] = mean_position(phi), mean_momentum(phi, h.hbar)
    amplitudes = phi.amplitudes
    for k in range(1, n_steps + 1):
        amplitudes = propagator.step(amplitudes)
        state = phi.with_amplitudes(amplitudes)
        x_quantum[k], p_quantum[k] = mean_position(state), mean_momentum(state, h.hbar)
    final = propagator(phi.with_amplitudes(amplitudes), 0)

    data: Dict[str, Any] = {"t": trajectory.times}
    for axis in range(grid.dim):
        data[f"x{axis}_quantum"] = x_quantum[:, axis]
        data[f"x{axis}_classical"] = trajectory.positions[:, axis]
        data[f"p{axis}_quantum"] = p_quantum[:, axis]
        data[f"p{axis}_classical"] = trajectory.momenta[:, axis]
    report = ComparisonReport(
        table=pd.DataFrame(data),
        max_position_deviation=float(np.max(np.abs(x_quantum - trajectory.positions))),
        max_momentum_deviation=float(np.max(np.abs(p_quantum - trajectory.momenta))),
        tolerance=grid.spacing,
        metadata={
            "horizon": horizon,
            "dt": dt,
            "n_steps": n_steps,
            "potential": h.describe(),
            "boundary_warning": bool(final.metadata.get("boundary_warning", False)),
        },
    )
    event = SimulationEvent.CHECK_PASSED if report.passed else SimulationEvent.CHECK_FAILED
    log_event(
        logger,
        event,
        "quantum_classical_compare",
        max_position_deviation=report.max_position_deviation,
        tolerance=report.tolerance,
    )
    return report
