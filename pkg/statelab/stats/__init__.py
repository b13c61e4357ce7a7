"""
Statistical machinery for acceptance decisions.

Reports with moments and histograms, normality and isotropy tests,
Born-rule frequency tables and diffusion fits.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__description__ = "Hypothesis tests, Born statistics and diffusion fits"

from .born import (
    BornTarget as BornTarget,
    born_rule_curve as born_rule_curve,
    epsilon_sensitivity as epsilon_sensitivity,
    frequency_agreement as frequency_agreement,
    manifold_born_table as manifold_born_table,
    targets_at_distances as targets_at_distances,
)
from .diffusion import (
    DiffusionFit as DiffusionFit,
    diffusion_fit as diffusion_fit,
    simulate_brownian as simulate_brownian,
)
from .hypothesis import (
    DEFAULT_ALPHA as DEFAULT_ALPHA,
    isotropy_test as isotropy_test,
    lilliefors_statistic as lilliefors_statistic,
    normality_test as normality_test,
)
from .report import (
    SCHEMA_VERSION as SCHEMA_VERSION,
    StatsReport as StatsReport,
    describe as describe,
)

__all__ = [
    "BornTarget",
    "born_rule_curve",
    "epsilon_sensitivity",
    "frequency_agreement",
    "manifold_born_table",
    "targets_at_distances",
    "DiffusionFit",
    "diffusion_fit",
    "simulate_brownian",
    "DEFAULT_ALPHA",
    "isotropy_test",
    "lilliefors_statistic",
    "normality_test",
    "SCHEMA_VERSION",
    "StatsReport",
    "describe",
]
