"""
Fubini-Study geometry of packet states.

Distances between rays, the identities relating them to Euclidean
(phase-space) distances of packet coordinates, and the orthonormal
tangent frame at a packet state.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "fubini_study_distance",
    "fubini_study_distance_vectors",
    "euclidean_distance_from_angle",
    "metric_identity_residual",
    "phase_space_metric_identity_residual",
    "TangentFrame",
    "tangent_frame",
    "shifted_operator_identity_residuals",
]

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..errors import DegenerateDirectionError
from ..grid.hilbert import (
    apply_momentum,
    apply_position,
    inner_product,
    mean_position,
    norm,
    real_metric,
)
from ..types import GridSpec, PacketParams, StateVector, VectorLike
from .packets import check_margin, make_packet, overlap_gaussian, phase_space_overlap_sq

DEGENERATE_TOL = 1e-12
"""Norm below which a tangent direction is treated as zero."""


def fubini_study_distance(phi: StateVector, psi: StateVector) -> float:
    """
    Fubini-Study distance between the rays of two unit states.

    Args:
        phi: Unit state
        psi: Unit state

    Returns:
        arccos(|(phi, psi)|) in [0, pi/2]; the overlap is clamped to [0, 1]
    """
    overlap = abs(inner_product(phi, psi))
    return float(np.arccos(np.clip(overlap, 0.0, 1.0)))


def fubini_study_distance_vectors(reference: np.ndarray, states: np.ndarray) -> np.ndarray:
    """
    Fubini-Study distance from one coefficient vector to many.

    Args:
        reference: Unit complex vector of length N
        states: Unit complex vectors, shape (..., N)

    Returns:
        Distances with the leading shape of ``states``
    """
    overlap = np.abs(np.asarray(states) @ np.conj(np.asarray(reference)))
    return np.arccos(np.clip(overlap, 0.0, 1.0))


def euclidean_distance_from_angle(theta: float, sigma: float) -> float:
    """
    Invert cos^2(theta) = exp(-|a - b|^2 / 4 sigma^2) for |a - b|.

    Args:
        theta: Fubini-Study distance between two packets at rest
        sigma: Packet width

    Returns:
        2 sigma sqrt(-ln cos^2 theta)
    """
    c2 = np.cos(theta) ** 2
    if c2 >= 1.0:
        return 0.0
    return float(2.0 * sigma * np.sqrt(-np.log(c2)))


def metric_identity_residual(
    a: VectorLike, b: VectorLike, sigma: float, grid: Optional[GridSpec] = None
) -> float:
    """
    Residual of exp(-|a - b|^2 / 4 sigma^2) = cos^2 theta(g_a, g_b) on a grid.

    Args:
        a: First center
        b: Second center
        sigma: Packet width
        grid: Grid (defaults to N = 512, L = 40 sigma)

    Returns:
        Absolute residual
    """
    pa = PacketParams(a=a, sigma=sigma)
    pb = PacketParams(a=b, sigma=sigma)
    grid = grid or GridSpec.for_packet(sigma, dim=pa.dim)
    theta = fubini_study_distance(make_packet(pa, grid), make_packet(pb, grid))
    return abs(overlap_gaussian(a, b, sigma) ** 2 - np.cos(theta) ** 2)


def phase_space_metric_identity_residual(
    a: VectorLike,
    p: VectorLike,
    b: VectorLike,
    q: VectorLike,
    sigma: float,
    hbar: float = 1.0,
    grid: Optional[GridSpec] = None,
) -> float:
    """
    Residual of exp(-|a - b|^2 / 4 sigma^2 - |p - q|^2 sigma^2 / hbar^2) = cos^2 theta.

    Args:
        a: First center
        p: First momentum
        b: Second center
        q: Second momentum
        sigma: Packet width
        hbar: Reduced Planck constant
        grid: Grid (defaults to N = 512, L = 40 sigma)

    Returns:
        Absolute residual between the closed form and the grid value
    """
    first = PacketParams(a=a, p=p, sigma=sigma, hbar=hbar)
    second = PacketParams(a=b, p=q, sigma=sigma, hbar=hbar)
    grid = grid or GridSpec.for_packet(sigma, dim=first.dim)
    theta = fubini_study_distance(make_packet(first, grid), make_packet(second, grid))
    return abs(phase_space_overlap_sq(a, p, b, q, sigma, hbar) - np.cos(theta) ** 2)


@dataclass(frozen=True)
class TangentFrame:
    """
    Orthonormal frame of distinguished tangent directions at a packet state.

    All vectors are unit-normalized and mutually orthogonal under the
    real metric Re(., .).
    """

    base: StateVector
    """The packet state the frame is attached to."""

    params: PacketParams
    """Packet coordinates of the base state."""

    e_a: List[StateVector]
    """Position directions, normalized (x_alpha - <x_alpha>) phi."""

    e_p: List[StateVector]
    """Momentum directions, normalized i (x_alpha - <x_alpha>) phi."""

    e_spread: StateVector
    """Width direction, normalized i (|x - a|^2 - <|x - a|^2>) phi."""

    e_phase: StateVector
    """Fiber direction -i phi."""

    def vectors(self) -> List[StateVector]:
        """Frame vectors in the order e_a, e_p, e_spread, e_phase."""
        return [*self.e_a, *self.e_p, self.e_spread, self.e_phase]

    def labels(self) -> List[str]:
        """Names matching :meth:`vectors`."""
        d = len(self.e_a)
        return (
            [f"a{alpha}" for alpha in range(d)]
            + [f"p{alpha}" for alpha in range(d)]
            + ["spread", "phase"]
        )

    def gram(self) -> np.ndarray:
        """Real-metric Gram matrix of the frame (identity within round-off)."""
        vectors = self.vectors()
        n = len(vectors)
        gram = np.empty((n, n))
        for i in range(n):
            for j in range(i, n):
                gram[i, j] = gram[j, i] = real_metric(vectors[i], vectors[j])
        return gram

    def components(self, v: StateVector) -> Dict[str, float]:
        """
        Real-metric components of a tangent vector along the frame.

        Args:
            v: Tangent vector at the base state

        Returns:
            Mapping from frame label to component
        """
        return {
            label: real_metric(v, e) for label, e in zip(self.labels(), self.vectors())
        }


def _unit(v: StateVector, label: str) -> StateVector:
    n = norm(v)
    if n < DEGENERATE_TOL:
        raise DegenerateDirectionError(f"tangent direction {label} has norm {n:.3e}")
    return v.with_amplitudes(v.amplitudes / n)


def tangent_frame(params: PacketParams, grid: GridSpec) -> TangentFrame:
    """
    Build the orthonormal tangent frame at a packet state.

    The directions are the analytic parameter derivatives of the packet
    with their fiber components removed by subtracting grid expectations,
    so orthogonality to phi and i phi holds on the grid.

    Args:
        params: Packet parameters
        grid: Grid

    Returns:
        TangentFrame at make_packet(params, grid)

    Raises:
        MarginError: If the packet does not fit the grid
        DegenerateDirectionError: If a direction has zero norm
    """
    check_margin(params, grid)
    phi = make_packet(params, grid)
    coords = grid.coordinates()
    centered = [x - m for x, m in zip(coords, mean_position(phi))]
    density = np.abs(phi.amplitudes) ** 2 * grid.cell_volume

    e_a = [
        _unit(phi.with_amplitudes(u * phi.amplitudes), f"a{alpha}")
        for alpha, u in enumerate(centered)
    ]
    e_p = [
        _unit(phi.with_amplitudes(1j * u * phi.amplitudes), f"p{alpha}")
        for alpha, u in enumerate(centered)
    ]
    r2 = sum(u**2 for u in centered)
    r2 = r2 - np.sum(r2 * density)
    e_spread = _unit(phi.with_amplitudes(1j * r2 * phi.amplitudes), "spread")
    e_phase = phi.with_amplitudes(-1j * phi.amplitudes)
    return TangentFrame(
        base=phi, params=params, e_a=e_a, e_p=e_p, e_spread=e_spread, e_phase=e_phase
    )


def shifted_operator_identity_residuals(
    params: PacketParams, grid: GridSpec, sign: int = 1
) -> Tuple[float, float]:
    """
    Grid residuals of the shifted position and momentum identities at a packet.

    The identities are (x - a I) phi = (x - a) phi and
    (p - p I) phi = sign * (i hbar / 2 sigma^2) (x - a) phi. With
    p = -i hbar d/dx the identity holds for ``sign = +1``; ``sign = -1``
    evaluates the opposite sign convention for comparison.

    Args:
        params: Packet parameters
        grid: Grid
        sign: +1 or -1

    Returns:
        (position residual, momentum residual), norms summed in quadrature over axes

    Raises:
        ValueError: If sign is not +1 or -1
        MarginError: If the packet does not fit the grid
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    check_margin(params, grid)
    phi = make_packet(params, grid)
    coords = grid.coordinates()
    position_sq = 0.0
    momentum_sq = 0.0
    for alpha in range(grid.dim):
        u = coords[alpha] - params.center[alpha]
        x_phi = apply_position(phi, alpha).amplitudes - params.center[alpha] * phi.amplitudes
        position_sq += norm(phi.with_amplitudes(x_phi - u * phi.amplitudes)) ** 2
        p_phi = (
            apply_momentum(phi, alpha, params.hbar).amplitudes
            - params.momentum[alpha] * phi.amplitudes
        )
        predicted = sign * (1j * params.hbar / (2.0 * params.sigma**2)) * u * phi.amplitudes
        momentum_sq += norm(phi.with_amplitudes(p_phi - predicted)) ** 2
    return float(np.sqrt(position_sq)), float(np.sqrt(momentum_sq))
