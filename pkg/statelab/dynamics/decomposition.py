"""
Velocity decomposition of the Schrodinger flow at packet states.

The velocity d phi / dt = -(i / hbar) h phi at a packet is projected on
the tangent frame (position, momentum, width and fiber directions), and
the projections are compared with their closed forms.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["VelocityDecomposition", "velocity_state", "decompose_velocity"]

from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from ..grid.hilbert import apply_hamiltonian, expectation, norm
from ..grid.potentials import HamiltonianSpec, HarmonicPotential
from ..manifold.geometry import tangent_frame
from ..types import GridSpec, PacketParams, StateVector

COMPONENTS = ("phase_rate", "classical_velocity", "acceleration", "spreading")
"""Names of the four frame components, in report order."""


@dataclass(frozen=True)
class VelocityDecomposition:
    """
    Projections of the Schrodinger velocity on the tangent frame at a packet.

    Magnitudes combine the per-axis components in quadrature. The
    ``predicted`` mapping holds the closed-form values for the same four
    components.
    """

    phase_rate: float
    """Component along the fiber direction, E / hbar."""

    classical_velocity_comp: float
    """Magnitude of the components along the position directions, |p| / 2 m sigma."""

    acceleration_comp: float
    """Magnitude of the components along the momentum directions, m |w| sigma / hbar."""

    spreading_comp: float
    """Component along the width direction."""

    total_speed_sq: float
    """Squared norm of the velocity."""

    residual_sq: float
    """total_speed_sq minus the sum of the squared frame components."""

    classical_velocity_vector: np.ndarray = field(default_factory=lambda: np.zeros(1))
    """Signed per-axis components along the position directions."""

    acceleration_vector: np.ndarray = field(default_factory=lambda: np.zeros(1))
    """Signed per-axis components along the momentum directions."""

    energy: float = 0.0
    """Grid expectation of the Hamiltonian."""

    predicted: Dict[str, float] = field(default_factory=dict)
    """Closed-form predictions keyed by component name."""

    @property
    def relative_residual(self) -> float:
        """residual_sq / total_speed_sq (zero for a vanishing velocity)."""
        if self.total_speed_sq == 0.0:
            return 0.0
        return abs(self.residual_sq) / self.total_speed_sq

    def measured(self) -> Dict[str, float]:
        """Measured values keyed like :attr:`predicted`."""
        return {
            "phase_rate": self.phase_rate,
            "classical_velocity": self.classical_velocity_comp,
            "acceleration": self.acceleration_comp,
            "spreading": self.spreading_comp,
        }

    def component_errors(self, floor: float = 1e-9) -> Dict[str, float]:
        """
        Relative error of each component against its closed form.

        Components whose prediction is below ``floor`` times the speed
        are compared in absolute terms, scaled by the speed.

        Args:
            floor: Relative threshold for switching to the absolute comparison

        Returns:
            Mapping from component name to error
        """
        speed = float(np.sqrt(self.total_speed_sq)) or 1.0
        errors = {}
        for name, value in self.measured().items():
            predicted = self.predicted.get(name, 0.0)
            if abs(predicted) > floor * speed:
                errors[name] = abs(value - predicted) / abs(predicted)
            else:
                errors[name] = abs(value - predicted) / speed
        return errors


def velocity_state(phi: StateVector, h: HamiltonianSpec) -> StateVector:
    """
    Tangent vector of the Schrodinger flow, -(i / hbar) h phi.

    Args:
        phi: Unit state
        h: Hamiltonian specification

    Returns:
        Unnormalized velocity vector
    """
    h_phi = apply_hamiltonian(phi, h)
    return h_phi.with_amplitudes((-1j / h.hbar) * h_phi.amplitudes, **h_phi.metadata)


def _predictions(params: PacketParams, h: HamiltonianSpec) -> Dict[str, float]:
    d = params.dim
    m, hbar, sigma = h.mass, h.hbar, params.sigma
    p = params.momentum
    potential_mean = 0.0
    expectation_fn = getattr(h.potential, "packet_expectation", None)
    if expectation_fn is not None:
        potential_mean = expectation_fn(params.center, sigma)
    energy = np.dot(p, p) / (2.0 * m) + d * hbar**2 / (8.0 * m * sigma**2) + potential_mean
    spreading = np.sqrt(2.0 * d) * hbar / (8.0 * m * sigma**2)
    if isinstance(h.potential, HarmonicPotential):
        spreading -= h.potential.stiffness * d * sigma**2 / (np.sqrt(2.0 * d) * hbar)
    force = -h.potential.gradient(params.center)
    return {
        "phase_rate": float(h.scale * energy / hbar),
        "classical_velocity": float(abs(h.scale) * np.linalg.norm(p) / (2.0 * m * sigma)),
        "acceleration": float(abs(h.scale) * np.linalg.norm(force) * sigma / hbar),
        "spreading": float(h.scale * spreading),
    }


def decompose_velocity(
    params: PacketParams, h: HamiltonianSpec, grid: Optional[GridSpec] = None
) -> VelocityDecomposition:
    """
    Project the Schrodinger velocity at a packet on the tangent frame.

    Args:
        params: Packet parameters (mass and hbar are taken from ``h``)
        h: Hamiltonian specification
        grid: Grid (defaults to N = 512, L = 40 sigma)

    Returns:
        Measured components, closed-form predictions and the residual

    Raises:
        MarginError: If the packet does not fit the grid
        DegenerateDirectionError: If the frame cannot be built
    """
    params = PacketParams(
        a=params.center, p=params.momentum, sigma=params.sigma, mass=h.mass, hbar=h.hbar
    )
    grid = grid or GridSpec.for_packet(params.sigma, dim=params.dim)
    frame = tangent_frame(params, grid)
    velocity = velocity_state(frame.base, h)

    classical = np.array([expectation(e, velocity) for e in frame.e_a])
    acceleration = np.array([expectation(e, velocity) for e in frame.e_p])
    spreading = expectation(frame.e_spread, velocity)
    phase_rate = expectation(frame.e_phase, velocity)

    total = norm(velocity) ** 2
    captured = (
        float(np.dot(classical, classical))
        + float(np.dot(acceleration, acceleration))
        + spreading**2
        + phase_rate**2
    )
    return VelocityDecomposition(
        phase_rate=phase_rate,
        classical_velocity_comp=float(np.linalg.norm(classical)),
        acceleration_comp=float(np.linalg.norm(acceleration)),
        spreading_comp=spreading,
        total_speed_sq=total,
        residual_sq=total - captured,
        classical_velocity_vector=classical,
        acceleration_vector=acceleration,
        energy=expectation(frame.base, apply_hamiltonian(frame.base, h)),
        predicted=_predictions(params, h),
    )
