"""
Random walks in the space of states.

GUE-driven walks in the full state space, translation walks on the
packet manifold, reproducible per-trial seeding and trajectory dumps.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__description__ = "Random-matrix and constrained random walks"

from .config import (
    RecordPolicy as RecordPolicy,
    WalkConfig as WalkConfig,
    WalkEnsemble as WalkEnsemble,
    WalkRecord as WalkRecord,
    trial_rng as trial_rng,
    trial_seed as trial_seed,
)
from .constrained import (
    constrained_ensemble as constrained_ensemble,
    translation_error as translation_error,
    walk_constrained as walk_constrained,
)
from .gue import (
    GUEEnsemble as GUEEnsemble,
    calibrate_scale as calibrate_scale,
    empirical_spectrum as empirical_spectrum,
    sample_gue as sample_gue,
    sample_gue_batch as sample_gue_batch,
    semicircle_support as semicircle_support,
)
from .io import (
    records_frame as records_frame,
    trajectory_frame as trajectory_frame,
    write_trajectory_csv as write_trajectory_csv,
)
from .unconstrained import (
    ProductWalkResult as ProductWalkResult,
    fiber_orthogonal_directions as fiber_orthogonal_directions,
    product_state_defect as product_state_defect,
    project_gue_step_onto_classical as project_gue_step_onto_classical,
    sample_step_components as sample_step_components,
    step_tangent_components as step_tangent_components,
    unconstrained_ensemble as unconstrained_ensemble,
    walk_product as walk_product,
    walk_unconstrained as walk_unconstrained,
)

__all__ = [
    "RecordPolicy",
    "WalkConfig",
    "WalkEnsemble",
    "WalkRecord",
    "trial_rng",
    "trial_seed",
    "constrained_ensemble",
    "translation_error",
    "walk_constrained",
    "GUEEnsemble",
    "calibrate_scale",
    "empirical_spectrum",
    "sample_gue",
    "sample_gue_batch",
    "semicircle_support",
    "records_frame",
    "trajectory_frame",
    "write_trajectory_csv",
    "ProductWalkResult",
    "fiber_orthogonal_directions",
    "product_state_defect",
    "project_gue_step_onto_classical",
    "sample_step_components",
    "step_tangent_components",
    "unconstrained_ensemble",
    "walk_product",
    "walk_unconstrained",
]
