"""
State Geometry Experiments Library (statelab)

A library of seeded numerical experiments on the geometry of Gaussian
wave packets inside the projective state space: the Fubini-Study metric
on the packet manifold, the decomposition of Schrodinger velocity into
classical and quantum parts, Ehrenfest dynamics, GUE-driven random walks
and the Born-rule statistics of their endpoints, and the estimate that
freezes macroscopic objects onto the classical manifold.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__description__ = "A library for experiments with packet geometry and random walks in state space"

# Re-export from interfaces module
from .interfaces import (
    Potential as Potential,
    Experiment as Experiment,
)

# Re-export from types module
from .types import (
    GridSpec as GridSpec,
    StateVector as StateVector,
    PacketParams as PacketParams,
    ClassicalState as ClassicalState,
    SimulationEvent as SimulationEvent,
    SimulationLog as SimulationLog,
    SimulationLogger as SimulationLogger,
)

# Re-export from errors module
from .errors import (
    GridMismatchError as GridMismatchError,
    MarginError as MarginError,
    NonHermitianError as NonHermitianError,
    DegenerateDirectionError as DegenerateDirectionError,
    InsufficientSamplesError as InsufficientSamplesError,
    ConfigError as ConfigError,
)

# Re-export from loggers module
from .logger import (
    PlainLogger as PlainLogger,
    ConsoleLogger as ConsoleLogger,
    NullLogger as NullLogger,
    PandasLogger as PandasLogger,
)

# Re-export from grid package
from .grid import (
    FreePotential as FreePotential,
    LinearPotential as LinearPotential,
    HarmonicPotential as HarmonicPotential,
    TabulatedPotential as TabulatedPotential,
    HamiltonianSpec as HamiltonianSpec,
    SplitStepPropagator as SplitStepPropagator,
    inner_product as inner_product,
)

# Re-export from manifold package
from .manifold import (
    make_packet as make_packet,
    overlap_gaussian as overlap_gaussian,
    fubini_study_distance as fubini_study_distance,
    tangent_frame as tangent_frame,
)

# Re-export from dynamics package
from .dynamics import (
    decompose_velocity as decompose_velocity,
    ehrenfest_projections as ehrenfest_projections,
    quantum_classical_compare as quantum_classical_compare,
)

# Re-export from walks package
from .walks import (
    GUEEnsemble as GUEEnsemble,
    WalkConfig as WalkConfig,
    WalkEnsemble as WalkEnsemble,
    walk_unconstrained as walk_unconstrained,
    walk_constrained as walk_constrained,
)

# Re-export from stats package
from .stats import (
    StatsReport as StatsReport,
    normality_test as normality_test,
    isotropy_test as isotropy_test,
    born_rule_curve as born_rule_curve,
    diffusion_fit as diffusion_fit,
)

# Re-export from macro module
from .macro import (
    MacroScenario as MacroScenario,
    freezing_report as freezing_report,
)

# Re-export from configuration and experiment modules
from .config import (
    ExperimentConfig as ExperimentConfig,
    load_config as load_config,
)
from .experiment import (
    ExperimentRunner as ExperimentRunner,
    ExperimentResult as ExperimentResult,
    RunManifest as RunManifest,
)

# Explicit __all__ for public API
__all__ = [
    # Interfaces
    "Potential",
    "Experiment",
    # Types
    "GridSpec",
    "StateVector",
    "PacketParams",
    "ClassicalState",
    "SimulationEvent",
    "SimulationLog",
    "SimulationLogger",
    # Errors
    "GridMismatchError",
    "MarginError",
    "NonHermitianError",
    "DegenerateDirectionError",
    "InsufficientSamplesError",
    "ConfigError",
    # Loggers
    "PlainLogger",
    "ConsoleLogger",
    "NullLogger",
    "PandasLogger",
    # Grid
    "FreePotential",
    "LinearPotential",
    "HarmonicPotential",
    "TabulatedPotential",
    "HamiltonianSpec",
    "SplitStepPropagator",
    "inner_product",
    # Packet manifold
    "make_packet",
    "overlap_gaussian",
    "fubini_study_distance",
    "tangent_frame",
    # Dynamics
    "decompose_velocity",
    "ehrenfest_projections",
    "quantum_classical_compare",
    # Walks
    "GUEEnsemble",
    "WalkConfig",
    "WalkEnsemble",
    "walk_unconstrained",
    "walk_constrained",
    # Statistics
    "StatsReport",
    "normality_test",
    "isotropy_test",
    "born_rule_curve",
    "diffusion_fit",
    # Macro estimate
    "MacroScenario",
    "freezing_report",
    # Experiment framework
    "ExperimentConfig",
    "load_config",
    "ExperimentRunner",
    "ExperimentResult",
    "RunManifest",
]
