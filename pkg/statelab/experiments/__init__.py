"""
Named experiments run by the command-line runner.

Every experiment implements the :class:`~statelab.interfaces.Experiment`
protocol; ``all`` runs the others in a fixed order and collects their
outputs under one directory per experiment.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__description__ = "Experiments checking packet geometry, dynamics, walks and macro estimates"

from typing import Dict, Type

from ..config import ExperimentConfig, ExperimentName
from ..experiment import ExperimentResult
from ..interfaces import Experiment
from ..logger import NullLogger, log_event
from ..types import SimulationEvent, SimulationLogger
from .born import BornCheckExperiment as BornCheckExperiment
from .dynamics import (
    ClassicalCompareExperiment as ClassicalCompareExperiment,
    DecomposeExperiment as DecomposeExperiment,
    EhrenfestExperiment as EhrenfestExperiment,
)
from .macro import MacroEstimateExperiment as MacroEstimateExperiment
from .metric import VerifyMetricExperiment as VerifyMetricExperiment
from .walks import (
    ConstrainedWalkExperiment as ConstrainedWalkExperiment,
    GUEWalkExperiment as GUEWalkExperiment,
)


class AllExperiment:
    """The full acceptance suite."""

    name = "all"

    def run(
        self, config: ExperimentConfig, logger: SimulationLogger = NullLogger()
    ) -> ExperimentResult:
        result = ExperimentResult(name=self.name)
        for name, cls in EXPERIMENTS.items():
            if name == ExperimentName.ALL:
                continue
            log_event(logger, SimulationEvent.TRIAL_STARTED, self.name, experiment=name.value)
            part = cls().run(config, logger)
            result.merge(part, name.value)
            result.metadata[name.value] = part.metadata
            log_event(
                logger, SimulationEvent.TRIAL_FINISHED, self.name,
                experiment=name.value, passed=part.passed,
            )
        return result


EXPERIMENTS: Dict[ExperimentName, Type[Experiment]] = {
    ExperimentName.VERIFY_METRIC: VerifyMetricExperiment,
    ExperimentName.DECOMPOSE: DecomposeExperiment,
    ExperimentName.EHRENFEST: EhrenfestExperiment,
    ExperimentName.CLASSICAL_COMPARE: ClassicalCompareExperiment,
    ExperimentName.GUE_WALK: GUEWalkExperiment,
    ExperimentName.CONSTRAINED_WALK: ConstrainedWalkExperiment,
    ExperimentName.BORN_CHECK: BornCheckExperiment,
    ExperimentName.MACRO_ESTIMATE: MacroEstimateExperiment,
    ExperimentName.ALL: AllExperiment,
}
"""Experiment classes by name, in suite order."""


def get_experiment(name: str) -> Experiment:
    """
    Instantiate an experiment by name.

    Args:
        name: Experiment name, e.g. ``verify-metric``

    Returns:
        Experiment instance

    Raises:
        ValueError: If the name is unknown
    """
    return EXPERIMENTS[ExperimentName(name)]()


__all__ = [
    "AllExperiment",
    "BornCheckExperiment",
    "ClassicalCompareExperiment",
    "ConstrainedWalkExperiment",
    "DecomposeExperiment",
    "EhrenfestExperiment",
    "GUEWalkExperiment",
    "MacroEstimateExperiment",
    "VerifyMetricExperiment",
    "EXPERIMENTS",
    "get_experiment",
]
