"""
Experiment framework: results, run manifests and the runner.

Experiments return an :class:`ExperimentResult` with tables, statistical
reports and acceptance criteria. The :class:`ExperimentRunner` persists
a result as CSV and JSON files and closes the run with a
:class:`RunManifest` that lists every file with its SHA-256 checksum.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "Criterion",
    "ExperimentResult",
    "RunManifest",
    "ExperimentRunner",
    "MANIFEST_NAME",
    "SEED_DERIVATION",
    "file_checksum",
    "verify_manifest",
    "table_schema",
    "undocumented_columns",
]

import hashlib
import json
import re
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np
import pandas as pd

from .config import ExperimentConfig, default_output_root
from .interfaces import Experiment
from .logger import NullLogger, log_event
from .stats.report import SCHEMA_VERSION, StatsReport
from .types import SimulationEvent, SimulationLogger

MANIFEST_NAME = "manifest.json"
"""File name of the run manifest inside the output directory."""

SEED_DERIVATION = "numpy.random.default_rng(SeedSequence(master_seed, spawn_key=(trial,)))"
"""How per-trial generators derive from the master seed."""


@dataclass(frozen=True)
class Criterion:
    """An acceptance criterion evaluated by an experiment."""

    name: str
    """Short identifier, e.g. ``metric_identity``."""

    value: float
    """Measured quantity."""

    threshold: float
    """Bound the quantity is compared with."""

    passed: bool
    """Whether the criterion holds."""

    description: str = ""
    """What is compared."""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "value": self.value,
            "threshold": self.threshold,
            "passed": self.passed,
            "description": self.description,
        }


@dataclass
class ExperimentResult:
    """
    Results of one experiment run.

    Table and report keys become relative file names; a ``/`` in a key
    places the file in a subdirectory.
    """

    name: str
    """Experiment name."""

    tables: Dict[str, pd.DataFrame] = field(default_factory=dict)
    """Tabular outputs, written as CSV."""

    reports: Dict[str, Union[StatsReport, Dict[str, Any]]] = field(default_factory=dict)
    """Statistical reports and other JSON documents."""

    criteria: List[Criterion] = field(default_factory=list)
    """Acceptance criteria evaluated by the experiment."""

    seeds: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    """Seed records of the random ensembles used, by ensemble name."""

    start_time: float = 0.0
    """Start time in seconds since epoch."""

    end_time: float = 0.0
    """End time in seconds since epoch."""

    metadata: Dict[str, Any] = field(default_factory=dict)
    """Additional metadata as key-value pairs."""

    @property
    def duration(self) -> float:
        """
        Calculate the total duration of the experiment.

        Returns:
            Experiment duration in seconds
        """
        return self.end_time - self.start_time

    @property
    def passed(self) -> bool:
        """Whether every criterion holds."""
        return all(c.passed for c in self.criteria)

    @property
    def failed_criteria(self) -> List[Criterion]:
        return [c for c in self.criteria if not c.passed]

    def merge(self, other: "ExperimentResult", prefix: str) -> None:
        """
        Fold another result into this one under a key prefix.

        Args:
            other: Result to absorb
            prefix: Prefix for table, report, criterion and seed keys
        """
        for key, table in other.tables.items():
            self.tables[f"{prefix}/{key}"] = table
        for key, report in other.reports.items():
            self.reports[f"{prefix}/{key}"] = report
        for criterion in other.criteria:
            self.criteria.append(
                Criterion(
                    name=f"{prefix}:{criterion.name}",
                    value=criterion.value,
                    threshold=criterion.threshold,
                    passed=criterion.passed,
                    description=criterion.description,
                )
            )
        for key, record in other.seeds.items():
            self.seeds[f"{prefix}/{key}"] = record

    def summary(self) -> str:
        """
        Generate a human-readable summary of experiment results.

        Returns:
            Formatted string with the criteria and their outcome
        """
        lines = [
            f"Experiment Summary ({self.name}):",
            f"  Duration: {self.duration:.3f} seconds",
            f"  Tables: {len(self.tables)}  Reports: {len(self.reports)}",
        ]
        for c in self.criteria:
            mark = "pass" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}: {c.value:.6g} (threshold {c.threshold:.6g})")
        lines.append(f"  Verdict: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines)


def _jsonable(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _dumps(document: Any) -> str:
    return json.dumps(document, sort_keys=True, indent=2, default=_jsonable) + "\n"


def file_checksum(path: Union[str, Path]) -> str:
    """SHA-256 hex digest of a file."""
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for block in iter(lambda: handle.read(1 << 20), b""):
            digest.update(block)
    return digest.hexdigest()


def table_schema(experiment: str) -> Dict[str, Any]:
    """
    Column documentation of an experiment's tables.

    Args:
        experiment: Experiment name, e.g. ``born-check``

    Returns:
        Mapping with ``experiment``, ``schema_version`` and ``tables``;
        each table lists fixed ``columns`` and optional regex ``patterns``

    Raises:
        FileNotFoundError: If no schema ships for the experiment
    """
    source = resources.files("statelab").joinpath("schemas", f"{experiment}.json")
    if not source.is_file():
        raise FileNotFoundError(f"no column schema for {experiment!r}")
    return json.loads(source.read_text("utf-8"))


def undocumented_columns(experiment: str, tables: Dict[str, pd.DataFrame]) -> List[str]:
    """
    Table columns missing from the shipped schemas.

    Keys of merged results (``decompose/decomposition``) are looked up in
    the schema of their prefix.

    Args:
        experiment: Name of the experiment that produced the tables
        tables: Tables by key

    Returns:
        ``table.column`` entries with no documentation
    """
    missing = []
    for key in sorted(tables):
        owner, _, table = key.rpartition("/")
        try:
            entry = table_schema(owner or experiment)["tables"].get(table)
        except FileNotFoundError:
            entry = None
        if entry is None:
            missing.append(f"{key}.*")
            continue
        patterns = [re.compile(p) for p in entry.get("patterns", {})]
        for column in tables[key].columns:
            if column not in entry["columns"] and not any(p.match(column) for p in patterns):
                missing.append(f"{key}.{column}")
    return missing


@dataclass
class RunManifest:
    """Everything needed to reproduce and audit a run."""

    experiment: str
    """Experiment name."""

    tool_version: str
    """Package version that produced the run."""

    config: Dict[str, Any]
    """Configuration snapshot."""

    master_seed: int
    """Run-level seed."""

    seeds: Dict[str, Dict[str, Any]]
    """Per-ensemble seed records (trial counts, derivation, first trial seeds)."""

    started: float
    """Start timestamp, seconds since epoch."""

    finished: float
    """End timestamp, seconds since epoch."""

    files: Dict[str, str] = field(default_factory=dict)
    """Relative file path -> SHA-256 checksum."""

    criteria: List[Dict[str, Any]] = field(default_factory=list)
    """Criterion outcomes."""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "experiment": self.experiment,
            "tool_version": self.tool_version,
            "config": self.config,
            "master_seed": self.master_seed,
            "seed_derivation": SEED_DERIVATION,
            "seeds": self.seeds,
            "started": self.started,
            "finished": self.finished,
            "files": self.files,
            "criteria": self.criteria,
        }

    def write(self, directory: Union[str, Path]) -> Path:
        """Write ``manifest.json`` into a directory."""
        path = Path(directory) / MANIFEST_NAME
        path.write_text(_dumps(self.to_dict()), encoding="utf-8")
        return path

    @classmethod
    def read(cls, directory: Union[str, Path]) -> "RunManifest":
        """Load the manifest of a finished run."""
        data = json.loads((Path(directory) / MANIFEST_NAME).read_text(encoding="utf-8"))
        return cls(
            experiment=data["experiment"],
            tool_version=data["tool_version"],
            config=data["config"],
            master_seed=data["master_seed"],
            seeds=data.get("seeds", {}),
            started=data["started"],
            finished=data["finished"],
            files=data.get("files", {}),
            criteria=data.get("criteria", []),
        )


def verify_manifest(directory: Union[str, Path]) -> List[str]:
    """
    Re-check every checksum listed in a run manifest.

    Args:
        directory: Output directory of a finished run

    Returns:
        Problems found (missing files, checksum mismatches, unlisted
        files); empty when the inventory is intact

    Raises:
        FileNotFoundError: If the directory has no manifest
    """
    root = Path(directory)
    manifest = RunManifest.read(root)
    problems = []
    for relative, expected in sorted(manifest.files.items()):
        path = root / relative
        if not path.is_file():
            problems.append(f"missing: {relative}")
        elif file_checksum(path) != expected:
            problems.append(f"checksum mismatch: {relative}")
    listed = set(manifest.files)
    for path in sorted(root.rglob("*")):
        relative = path.relative_to(root).as_posix()
        if path.is_file() and relative != MANIFEST_NAME and relative not in listed:
            problems.append(f"unlisted: {relative}")
    return problems


class ExperimentRunner:
    """
    Runs an experiment and persists its outputs.

    Every file is written in a deterministic format (CSV with fixed float
    formatting, JSON with sorted keys), so identical configurations give
    byte-identical artifacts; only the manifest carries timestamps.
    """

    def __init__(
        self,
        experiment: Experiment,
        config: ExperimentConfig,
        output_dir: Optional[Union[str, Path]] = None,
        logger: SimulationLogger = NullLogger(),
    ) -> None:
        """
        Initialize the runner.

        Args:
            experiment: Experiment to run
            config: Validated configuration
            output_dir: Destination; defaults to ``config.output_dir`` or
                ``<output root>/<experiment>-<seed>``
            logger: Logger for events (defaults to NullLogger)

        Raises:
            TypeError: If ``experiment`` does not implement the Experiment protocol
        """
        if not isinstance(experiment, Experiment):
            raise TypeError("experiment must implement the Experiment protocol")

        self.experiment = experiment
        """Experiment to run."""

        self.config = config
        """Run configuration."""

        self.output_dir = Path(
            output_dir
            or config.output_dir
            or default_output_root() / f"{experiment.name}-{config.seed}"
        )
        """Directory receiving the artifacts."""

        self.logger = logger
        """Logger for events."""

    def _write(self, relative: str, content: str, files: Dict[str, str]) -> None:
        path = self.output_dir / relative
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        files[relative] = file_checksum(path)
        log_event(
            self.logger, SimulationEvent.ARTIFACT_WRITTEN, "ExperimentRunner",
            path=relative, sha256=files[relative],
        )

    def persist(self, result: ExperimentResult) -> RunManifest:
        """
        Write the tables, reports, criteria and manifest of a result.

        Args:
            result: Finished result

        Returns:
            The written manifest
        """
        self.output_dir.mkdir(parents=True, exist_ok=True)
        for column in undocumented_columns(result.name, result.tables):
            log_event(
                self.logger, SimulationEvent.WARNING, "ExperimentRunner",
                reason="undocumented_column", column=column,
            )
        files: Dict[str, str] = {}
        for key in sorted(result.tables):
            content = result.tables[key].to_csv(index=False, float_format="%.17g", lineterminator="\n")
            self._write(f"{key}.csv", content, files)
        for key in sorted(result.reports):
            report = result.reports[key]
            document = report.to_dict() if isinstance(report, StatsReport) else report
            self._write(f"{key}.json", _dumps(document), files)
        criteria = [c.to_dict() for c in result.criteria]
        self._write(
            "criteria.json",
            _dumps({"schema_version": SCHEMA_VERSION, "experiment": result.name, "criteria": criteria}),
            files,
        )
        manifest = RunManifest(
            experiment=result.name,
            tool_version=__version__,
            config=self.config.snapshot(),
            master_seed=self.config.seed,
            seeds=result.seeds,
            started=result.start_time,
            finished=result.end_time,
            files=files,
            criteria=criteria,
        )
        manifest.write(self.output_dir)
        return manifest

    def run(self) -> ExperimentResult:
        """
        Run the experiment and persist its outputs.

        Returns:
            ExperimentResult; criteria failures are reported, not raised

        Raises:
            ConfigError: If the configuration has no seed
        """
        seed = self.config.seed
        log_event(
            self.logger, SimulationEvent.TRIAL_STARTED, "ExperimentRunner",
            experiment=self.experiment.name, master_seed=seed,
        )
        start_time = time.time()
        result = self.experiment.run(self.config, self.logger)
        result.start_time = start_time
        result.end_time = time.time()
        self.persist(result)
        for criterion in result.criteria:
            event = SimulationEvent.CHECK_PASSED if criterion.passed else SimulationEvent.CHECK_FAILED
            log_event(
                self.logger, event, "ExperimentRunner",
                criterion=criterion.name, value=criterion.value, threshold=criterion.threshold,
            )
        log_event(
            self.logger, SimulationEvent.TRIAL_FINISHED, "ExperimentRunner",
            experiment=self.experiment.name, passed=result.passed, duration=result.duration,
        )
        return result
