"""
Gaussian packets: the embedding of classical phase space into state space.

A phase point (a, p) is mapped to the unit state
g_{a,sigma}(x) exp(i p x / hbar). This module builds those states on a
grid and provides their closed-form overlaps.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "MARGIN_SIGMAS",
    "check_margin",
    "make_packet",
    "overlap_gaussian",
    "overlap_discrepancy",
    "phase_space_overlap_sq",
    "packet_gram_matrix",
    "gram_min_singular_value",
]

from typing import Optional, Sequence

import numpy as np
import scipy.linalg

from ..errors import MarginError
from ..grid.hilbert import inner_product, normalize
from ..types import GridSpec, PacketParams, StateVector, VectorLike

MARGIN_SIGMAS = 6.0
"""Required clearance between a packet center and the grid boundary, in sigma."""


def check_margin(params: PacketParams, grid: GridSpec, extra: float = 0.0) -> None:
    """
    Ensure a packet (plus an optional extra reach) stays inside the grid.

    Args:
        params: Packet parameters
        grid: Grid
        extra: Additional reach around the center, e.g. the walk extent

    Raises:
        MarginError: If |a_alpha| + extra + 6 sigma > L/2 on some axis
        ValueError: If packet and grid dimensions differ
    """
    if params.dim != grid.dim:
        raise ValueError(f"packet dimension {params.dim} does not match grid dimension {grid.dim}")
    reach = extra + MARGIN_SIGMAS * params.sigma
    if not grid.margin_ok(params.center, reach):
        suggested = 2.0 * (float(np.max(np.abs(params.center))) + reach)
        raise MarginError(
            f"packet at {params.center.tolist()} with reach {reach:.4g} does not fit "
            f"a grid of extent {grid.extent:.4g}; use extent >= {suggested:.4g}"
        )


def make_packet(params: PacketParams, grid: GridSpec) -> StateVector:
    """
    Build the grid state of a Gaussian packet.

    phi(x) = (2 pi sigma^2)^(-d/4) exp(-|x - a|^2 / 4 sigma^2) exp(i p.x / hbar),
    renormalized on the grid.

    Args:
        params: Packet parameters
        grid: Grid

    Returns:
        Unit-normalized state

    Raises:
        MarginError: If the packet does not fit the grid
    """
    check_margin(params, grid)
    coords = grid.coordinates()
    r2 = sum((x - a) ** 2 for x, a in zip(coords, params.center))
    phase = sum(p * x for x, p in zip(coords, params.momentum)) / params.hbar
    envelope = (2.0 * np.pi * params.sigma**2) ** (-grid.dim / 4.0) * np.exp(
        -r2 / (4.0 * params.sigma**2)
    )
    return normalize(StateVector(envelope * np.exp(1j * phase), grid))


def overlap_gaussian(a: VectorLike, b: VectorLike, sigma: float) -> float:
    """
    Closed-form overlap (g_a, g_b) = exp(-|a - b|^2 / 8 sigma^2).

    Args:
        a: First center
        b: Second center
        sigma: Packet width

    Returns:
        Overlap in (0, 1]

    Raises:
        ValueError: If sigma is not positive
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    diff = np.atleast_1d(np.asarray(a, dtype=float)) - np.atleast_1d(np.asarray(b, dtype=float))
    return float(np.exp(-np.dot(diff, diff) / (8.0 * sigma**2)))


def overlap_discrepancy(
    a: VectorLike, b: VectorLike, sigma: float, grid: Optional[GridSpec] = None
) -> float:
    """
    Difference between the closed-form overlap and the grid overlap.

    Args:
        a: First center
        b: Second center
        sigma: Packet width
        grid: Grid (defaults to N = 512, L = 40 sigma in the packet dimension)

    Returns:
        |(g_a, g_b)_closed - (g_a, g_b)_grid|
    """
    params_a = PacketParams(a=a, sigma=sigma)
    params_b = PacketParams(a=b, sigma=sigma)
    grid = grid or GridSpec.for_packet(sigma, dim=params_a.dim)
    grid_value = inner_product(make_packet(params_a, grid), make_packet(params_b, grid))
    return abs(overlap_gaussian(a, b, sigma) - grid_value)


def phase_space_overlap_sq(
    a: VectorLike, p: VectorLike, b: VectorLike, q: VectorLike, sigma: float, hbar: float = 1.0
) -> float:
    """
    Closed-form transition probability between two packets.

    |(phi_{a,p}, phi_{b,q})|^2 = exp(-|a - b|^2 / 4 sigma^2 - |p - q|^2 / (hbar^2 / sigma^2)).

    Args:
        a: First center
        p: First momentum
        b: Second center
        q: Second momentum
        sigma: Packet width
        hbar: Reduced Planck constant

    Returns:
        Squared overlap modulus
    """
    da = np.atleast_1d(np.asarray(a, dtype=float)) - np.atleast_1d(np.asarray(b, dtype=float))
    dp = np.atleast_1d(np.asarray(p, dtype=float)) - np.atleast_1d(np.asarray(q, dtype=float))
    exponent = np.dot(da, da) / (4.0 * sigma**2) + np.dot(dp, dp) / (hbar**2 / sigma**2)
    return float(np.exp(-exponent))


def packet_gram_matrix(
    centers: Sequence[VectorLike], sigma: float, grid: Optional[GridSpec] = None
) -> np.ndarray:
    """
    Gram matrix of packets at rest at the given centers.

    With no grid the closed-form overlaps are used; with a grid the
    packets are built and their grid inner products taken.

    Args:
        centers: Packet centers
        sigma: Packet width
        grid: Optional grid

    Returns:
        Hermitian positive semi-definite matrix of overlaps
    """
    n = len(centers)
    gram = np.empty((n, n), dtype=complex)
    if grid is None:
        for i in range(n):
            for j in range(n):
                gram[i, j] = overlap_gaussian(centers[i], centers[j], sigma)
        return gram
    states = [make_packet(PacketParams(a=c, sigma=sigma), grid) for c in centers]
    for i in range(n):
        for j in range(n):
            gram[i, j] = inner_product(states[i], states[j])
    return gram


def gram_min_singular_value(gram: np.ndarray) -> float:
    """
    Smallest singular value of a Gram matrix (numerical rank indicator).

    Args:
        gram: Square matrix

    Returns:
        Smallest singular value
    """
    return float(np.min(scipy.linalg.svdvals(gram)))
