"""
Demo script for the state geometry experiments library.

This script builds a Gaussian packet on a grid, checks the Fubini-Study
distance against the closed-form overlap, decomposes the Schrodinger
velocity in a harmonic potential, runs a few GUE walks and finishes
with the freezing estimate for a 1 mm sphere.

Author: Mikhail Mikhailov
License: MIT
"""

import numpy as np

from statelab import (
    GridSpec,
    PacketParams,
    HarmonicPotential,
    HamiltonianSpec,
    GUEEnsemble,
    WalkConfig,
    MacroScenario,
    make_packet,
    overlap_gaussian,
    fubini_study_distance,
    decompose_velocity,
    walk_unconstrained,
    freezing_report,
)


def main() -> None:
    """Run the demo."""
    print("=" * 60)
    print("State Geometry Experiments - Demo")
    print("=" * 60)

    grid = GridSpec.for_packet(1.0)
    print("\n1. Packet geometry:")
    print(f"   Grid: {grid.points_per_axis} points, extent {grid.extent}")
    rest = PacketParams(a=0.0, p=0.0, sigma=1.0)
    phi = make_packet(rest, grid)
    for offset in (0.5, 1.0, 2.0):
        psi = make_packet(rest.moved(a=[offset]), grid)
        theta = fubini_study_distance(phi, psi)
        closed = overlap_gaussian([0.0], [offset], 1.0) ** 2
        print(f"   |a - b| = {offset:.1f}: cos^2(theta) = {np.cos(theta) ** 2:.12f}, "
              f"closed form = {closed:.12f}")

    print("\n2. Velocity decomposition in a harmonic potential:")
    h = HamiltonianSpec(potential=HarmonicPotential(1.0))
    moving = PacketParams(a=1.0, p=0.5, sigma=1.0)
    decomposition = decompose_velocity(moving, h, grid)
    for key, value in decomposition.measured().items():
        predicted = decomposition.predicted.get(key, 0.0)
        print(f"   {key:<20} measured {value:.8f}  predicted {predicted:.8f}")
    print(f"   Relative residual: {decomposition.relative_residual:.2e}")

    print("\n3. GUE walks from a basis state (N = 32, 50 steps):")
    cfg = WalkConfig(n_steps=50, dt=0.1, n_trials=4, master_seed=2024,
                     ensemble=GUEEnsemble(dim=32, scale=0.1))
    phi0 = np.zeros(32, dtype=complex)
    phi0[0] = 1.0
    for trial in range(cfg.n_trials):
        record = walk_unconstrained(phi0, cfg, trial)
        print(f"   Trial {trial}: final distance {record.distances[-1]:.4f} rad "
              f"(seed {record.seed})")

    print("\n4. Freezing estimate for a 1 mm sphere in air:")
    report = freezing_report(MacroScenario())
    print("   " + report.summary().replace("\n", "\n   "))

    print("\n" + "=" * 60)
    print("Run the acceptance suite with: statelab run all --seed 0")
    print("=" * 60)


if __name__ == "__main__":
    main()
