"""
Experiment configuration: schema, presets, loading and validation.

Configurations are TOML files mapped onto a pydantic model tree. A run
configuration is assembled as preset < config file < command-line
overrides; :func:`validate` adds physics sanity checks on top of the
schema and reports problems as :class:`Diagnostic` records.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "ExperimentName",
    "UnitsMode",
    "PotentialKind",
    "GridConfig",
    "PacketConfig",
    "HamiltonianConfig",
    "WalkSettings",
    "StatsConfig",
    "MacroConfig",
    "ExperimentConfig",
    "Diagnostic",
    "OUTPUT_ROOT_ENV",
    "PRESETS",
    "default_output_root",
    "load_preset",
    "load_config",
    "validate",
    "validate_file",
]

import os
import re
import tomllib
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .errors import ConfigError, MarginError
from .grid.potentials import (
    FreePotential,
    HamiltonianSpec,
    HarmonicPotential,
    LinearPotential,
    TabulatedPotential,
)
from .macro import MacroScenario
from .manifold.packets import check_margin
from .types import GridSpec, PacketParams

OUTPUT_ROOT_ENV = "STATELAB_OUTPUT_ROOT"
"""Environment variable holding the default output root."""

PRESETS = ("default", "paper-1mm", "quick")
"""Presets shipped with the package."""


class ExperimentName(str, Enum):
    """Experiments known to the runner."""

    VERIFY_METRIC = "verify-metric"
    DECOMPOSE = "decompose"
    EHRENFEST = "ehrenfest"
    CLASSICAL_COMPARE = "classical-compare"
    GUE_WALK = "gue-walk"
    CONSTRAINED_WALK = "constrained-walk"
    BORN_CHECK = "born-check"
    MACRO_ESTIMATE = "macro-estimate"
    ALL = "all"


class UnitsMode(str, Enum):
    """Natural units for the quantum experiments, SI for macro estimates."""

    NATURAL = "natural"
    SI = "si"


class PotentialKind(str, Enum):
    FREE = "free"
    LINEAR = "linear"
    HARMONIC = "harmonic"
    TABULATED = "tabulated"


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class GridConfig(_Section):
    """Spatial grid; the extent defaults to 40 packet widths."""

    dim: int = Field(1, ge=1, le=3)
    points_per_axis: int = Field(512, ge=16)
    extent: Optional[float] = Field(None, gt=0)

    def spec(self, sigma: float) -> GridSpec:
        extent = self.extent if self.extent is not None else 40.0 * sigma
        return GridSpec(dim=self.dim, points_per_axis=self.points_per_axis, extent=extent)


class PacketConfig(_Section):
    """Initial packet."""

    center: List[float] = Field(default_factory=lambda: [0.0])
    momentum: List[float] = Field(default_factory=lambda: [0.0])
    sigma: float = Field(1.0, gt=0)

    def params(self, mass: float = 1.0, hbar: float = 1.0) -> PacketParams:
        return PacketParams(
            a=self.center, p=self.momentum, sigma=self.sigma, mass=mass, hbar=hbar
        )


class HamiltonianConfig(_Section):
    """Hamiltonian and propagation settings of the deterministic experiments."""

    potential: PotentialKind = PotentialKind.FREE
    force: List[float] = Field(default_factory=lambda: [0.0])
    """Constant force of the linear potential."""

    stiffness: float = Field(1.0, gt=0)
    """Spring constant of the harmonic potential."""

    potential_file: Optional[Path] = None
    """CSV file with a column V of samples on the grid, for the tabulated potential."""

    mass: float = Field(1.0, gt=0)
    hbar: float = Field(1.0, gt=0)
    dt: float = Field(0.01, gt=0)
    """Split-step time step."""

    horizon: Optional[float] = Field(None, gt=0)
    """Comparison horizon; defaults to one period (harmonic) or 10."""

    def spec(
        self, potential: Optional[PotentialKind] = None, grid: Optional[GridSpec] = None
    ) -> HamiltonianSpec:
        kind = potential or self.potential
        if kind == PotentialKind.TABULATED:
            if self.potential_file is None or grid is None:
                raise ConfigError("tabulated potential needs hamiltonian.potential_file and a grid")
            try:
                chosen = TabulatedPotential.from_csv(self.potential_file, grid)
            except (OSError, ValueError) as exc:
                raise ConfigError(f"cannot load tabulated potential: {exc}") from exc
        elif kind == PotentialKind.LINEAR:
            chosen = LinearPotential(self.force)
        elif kind == PotentialKind.HARMONIC:
            chosen = HarmonicPotential(self.stiffness)
        else:
            chosen = FreePotential()
        return HamiltonianSpec(potential=chosen, mass=self.mass, hbar=self.hbar)

    def comparison_horizon(self) -> float:
        if self.horizon is not None:
            return self.horizon
        if self.potential == PotentialKind.HARMONIC:
            return float(2.0 * np.pi / np.sqrt(self.stiffness / self.mass))
        return 10.0


class WalkSettings(_Section):
    """Random-walk settings shared by the walk experiments."""

    n_steps: int = Field(100, ge=1)
    dt: float = Field(0.1, gt=0)
    n_trials: int = Field(10_000, ge=1)
    step_std: float = Field(1.0, ge=0)
    """Per-axis velocity step standard deviation s_xi of constrained walks."""

    gue_dim: int = Field(128, ge=2, le=512)
    """Dimension of the dense GUE walks."""

    gue_scale: Optional[float] = Field(None, ge=0)
    """GUE energy scale; calibrated from step_std and sigma when unset."""

    chunk_size: int = Field(256, ge=1)
    workers: int = Field(1, ge=1)
    dump_trials: int = Field(100, ge=0)


class StatsConfig(_Section):
    """Statistical acceptance settings."""

    alpha: float = Field(0.01, gt=0, lt=1)
    n_resamples: int = Field(1999, ge=99)
    component_samples: int = Field(10_000, ge=100)
    component_grid_points: int = Field(256, ge=16)
    isotropy_directions: int = Field(4, ge=2)
    born_dim: int = Field(64, ge=2, le=512)
    born_trials: int = Field(100_000, ge=1)
    born_steps: int = Field(5, ge=1)
    born_step_scale: float = Field(0.01, gt=0)
    """dt * s of the Born walks."""

    born_distance_multiples: List[float] = Field(default_factory=lambda: [0.0, 0.5, 1.0])
    born_targets_per_distance: int = Field(2, ge=1)
    born_epsilon_multiple: float = Field(1.5, gt=0)
    epsilon_multiples: List[float] = Field(default_factory=lambda: [1.0, 1.25, 1.5, 2.0])
    relative_tolerance: float = Field(0.05, gt=0)
    """Tolerance of variance and diffusion-coefficient checks."""


class MacroConfig(_Section):
    """Macroscopic scenario (SI units) and sweep settings."""

    radius: float = Field(1e-3, gt=0)
    temperature: float = Field(293.0, gt=0)
    viscosity: float = Field(1.8e-5, gt=0)
    observation_time: float = Field(1e-13, gt=0)
    resolution_sigma: float = Field(1e-5, gt=0)
    wavelength: float = Field(1e-5, gt=0)
    threshold: Optional[float] = Field(None, gt=0)
    reference_diffusion: float = Field(1e-12, gt=0)
    tabulated_viscosity: float = Field(1e-5, gt=0)
    sweep_min_radius: float = Field(1e-9, gt=0)
    sweep_max_radius: float = Field(1e-2, gt=0)
    sweep_points: int = Field(15, ge=2)
    particle_dim: int = Field(8, ge=2, le=64)
    device_dim: int = Field(4, ge=1, le=64)
    product_steps: int = Field(50, ge=1)

    @model_validator(mode="after")
    def _check_sweep(self) -> "MacroConfig":
        if self.sweep_max_radius <= self.sweep_min_radius:
            raise ValueError("sweep_max_radius must exceed sweep_min_radius")
        return self

    def scenario(self) -> MacroScenario:
        return MacroScenario(
            radius=self.radius,
            temperature=self.temperature,
            viscosity=self.viscosity,
            observation_time=self.observation_time,
            resolution_sigma=self.resolution_sigma,
            wavelength=self.wavelength,
        )

    def sweep_radii(self) -> np.ndarray:
        return np.geomspace(self.sweep_min_radius, self.sweep_max_radius, self.sweep_points)


class ExperimentConfig(_Section):
    """Complete configuration of one run."""

    experiment: ExperimentName = ExperimentName.ALL
    master_seed: Optional[int] = Field(None, ge=0, lt=2**64)
    output_dir: Optional[Path] = None
    units: UnitsMode = UnitsMode.NATURAL
    grid: GridConfig = Field(default_factory=GridConfig)
    packet: PacketConfig = Field(default_factory=PacketConfig)
    hamiltonian: HamiltonianConfig = Field(default_factory=HamiltonianConfig)
    walk: WalkSettings = Field(default_factory=WalkSettings)
    stats: StatsConfig = Field(default_factory=StatsConfig)
    macro: MacroConfig = Field(default_factory=MacroConfig)

    @property
    def seed(self) -> int:
        """The master seed; raises when it is missing."""
        if self.master_seed is None:
            raise ConfigError("master_seed is required", ["master_seed: error: missing seed"])
        return self.master_seed

    def snapshot(self) -> Dict[str, Any]:
        """JSON-ready dump of the configuration."""
        return self.model_dump(mode="json")


@dataclass(frozen=True)
class Diagnostic:
    """One problem found in a configuration."""

    level: Literal["error", "warning"]
    """Severity; errors prevent a run."""

    location: str
    """``file:line`` when known, otherwise the dotted key path."""

    message: str
    """What is wrong."""

    def __str__(self) -> str:
        return f"{self.location}: {self.level}: {self.message}"


def default_output_root() -> Path:
    """Output root from the environment, falling back to ``./runs``."""
    return Path(os.environ.get(OUTPUT_ROOT_ENV, "runs"))


def _merge(base: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


_TABLE = re.compile(r"^\s*\[([^\[\]]+)\]\s*(#.*)?$")
_KEY = re.compile(r"^\s*([A-Za-z0-9_\-]+)\s*=")
_LINE = re.compile(r"line (\d+)")


def _locate(text: str, loc: Sequence[Union[str, int]]) -> Optional[int]:
    keys = [str(part) for part in loc if isinstance(part, str)]
    if not keys:
        return None
    table, key = ".".join(keys[:-1]), keys[-1]
    current = ""
    fallback = None
    for number, line in enumerate(text.splitlines(), start=1):
        header = _TABLE.match(line)
        if header:
            current = header.group(1).strip()
            if current in (table, ".".join(keys)) and fallback is None:
                fallback = number
            continue
        match = _KEY.match(line)
        if match and match.group(1) == key and current == table:
            return number
    return fallback


def _parse_toml(path: Path) -> Tuple[Optional[Dict[str, Any]], str, Optional[Diagnostic]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        return None, "", Diagnostic("error", str(path), f"cannot read file: {exc.strerror}")
    try:
        return tomllib.loads(text), text, None
    except tomllib.TOMLDecodeError as exc:
        found = _LINE.search(str(exc))
        where = f"{path}:{found.group(1)}" if found else str(path)
        return None, text, Diagnostic("error", where, f"invalid TOML: {exc}")


def _read_toml(path: Path) -> Tuple[Dict[str, Any], str]:
    data, text, problem = _parse_toml(path)
    if problem is not None or data is None:
        raise ConfigError(f"cannot load {path}", [str(problem)])
    return data, text


def load_preset(name: str) -> Dict[str, Any]:
    """
    Raw mapping of a shipped preset.

    Args:
        name: One of :data:`PRESETS`

    Returns:
        Parsed TOML mapping

    Raises:
        ConfigError: If the preset does not exist
    """
    if name not in PRESETS:
        raise ConfigError(
            f"unknown preset {name!r}", [f"preset: error: expected one of {', '.join(PRESETS)}"]
        )
    text = resources.files("statelab").joinpath("presets", f"{name}.toml").read_text("utf-8")
    return tomllib.loads(text)


def _schema_diagnostics(
    exc: ValidationError, text: Optional[str], source: Optional[Path]
) -> List[Diagnostic]:
    diagnostics = []
    for error in exc.errors():
        key_path = ".".join(str(part) for part in error["loc"]) or "<root>"
        line = _locate(text, error["loc"]) if text is not None else None
        if source is not None and line is not None:
            location = f"{source}:{line}"
        elif source is not None:
            location = f"{source}:{key_path}"
        else:
            location = key_path
        diagnostics.append(Diagnostic("error", location, f"{key_path}: {error['msg']}"))
    return diagnostics


def load_config(
    path: Optional[Union[str, Path]] = None,
    preset: Optional[str] = "default",
    overrides: Optional[Dict[str, Any]] = None,
) -> ExperimentConfig:
    """
    Assemble a configuration from a preset, a file and overrides.

    Args:
        path: Optional TOML file
        preset: Optional preset name applied first
        overrides: Top-level keys applied last (``master_seed``, ``output_dir``,
            ``experiment``)

    Returns:
        ExperimentConfig

    Raises:
        ConfigError: With ``file:line`` diagnostics if the result does not validate
    """
    data: Dict[str, Any] = load_preset(preset) if preset else {}
    text = None
    source = None
    if path is not None:
        source = Path(path)
        loaded, text = _read_toml(source)
        data = _merge(data, loaded)
    data = _merge(data, {k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        config = ExperimentConfig.model_validate(data)
    except ValidationError as exc:
        diagnostics = _schema_diagnostics(exc, text, source)
        raise ConfigError(
            f"invalid configuration ({len(diagnostics)} problem(s))",
            [str(d) for d in diagnostics],
        ) from exc
    errors = [d for d in validate(config) if d.level == "error"]
    if errors:
        raise ConfigError(
            f"invalid configuration ({len(errors)} problem(s))", [str(d) for d in errors]
        )
    return config


def _needs(config: ExperimentConfig, *names: ExperimentName) -> bool:
    return config.experiment == ExperimentName.ALL or config.experiment in names


def validate(config: ExperimentConfig) -> List[Diagnostic]:
    """
    Physics and completeness checks of a schema-valid configuration.

    Checks the seed, the packet margin on the grid, vector lengths,
    sample sizes of the statistical experiments and the step size of
    the split-step propagation. Never raises.

    Args:
        config: Configuration

    Returns:
        Diagnostics; empty when the configuration is fine
    """
    out: List[Diagnostic] = []
    if config.master_seed is None:
        out.append(Diagnostic("error", "master_seed", "missing seed; set master_seed or pass --seed"))

    dim = config.grid.dim
    for key in ("center", "momentum"):
        if len(getattr(config.packet, key)) != dim:
            out.append(
                Diagnostic("error", f"packet.{key}", f"expected {dim} component(s) for grid.dim = {dim}")
            )
    if config.hamiltonian.potential == PotentialKind.LINEAR and len(config.hamiltonian.force) != dim:
        out.append(Diagnostic("error", "hamiltonian.force", f"expected {dim} component(s)"))

    sigma = config.packet.sigma
    try:
        grid = config.grid.spec(sigma)
    except ValueError as exc:
        out.append(Diagnostic("error", "grid", str(exc)))
        grid = None
    if grid is not None and not any(d.location.startswith("packet.") for d in out):
        try:
            check_margin(config.packet.params(config.hamiltonian.mass, config.hamiltonian.hbar), grid)
        except MarginError as exc:
            out.append(Diagnostic("error", "grid.extent", str(exc)))

    h = config.hamiltonian
    if h.potential == PotentialKind.TABULATED:
        if h.potential_file is None:
            out.append(Diagnostic("error", "hamiltonian.potential_file", "required for the tabulated potential"))
        elif grid is not None:
            try:
                h.spec(grid=grid)
            except ConfigError as exc:
                out.append(Diagnostic("error", "hamiltonian.potential_file", str(exc)))

    if _needs(config, ExperimentName.CLASSICAL_COMPARE) and h.dt * h.hbar / (2.0 * h.mass * sigma**2) > 0.1:
        out.append(
            Diagnostic(
                "warning",
                "hamiltonian.dt",
                "dt exceeds 0.1 * 2 m sigma^2 / hbar; split-step results may not be converged",
            )
        )

    walk, stats = config.walk, config.stats
    if _needs(config, ExperimentName.CONSTRAINED_WALK) and walk.n_trials < 100:
        out.append(Diagnostic("error", "walk.n_trials", "normality tests need at least 100 trials"))
    elif _needs(config, ExperimentName.CONSTRAINED_WALK) and walk.n_trials < 1000:
        out.append(Diagnostic("warning", "walk.n_trials", "fewer than 1000 trials; tests have low power"))
    if _needs(config, ExperimentName.GUE_WALK):
        if stats.component_samples < 1000:
            out.append(
                Diagnostic("error", "stats.component_samples", "isotropy tests need at least 1000 samples")
            )
        try:
            component_grid = GridSpec(
                dim=dim, points_per_axis=stats.component_grid_points, extent=40.0 * sigma
            )
        except ValueError as exc:
            out.append(Diagnostic("error", "stats.component_grid_points", str(exc)))
        else:
            if component_grid.size > 512:
                out.append(
                    Diagnostic(
                        "error",
                        "stats.component_grid_points",
                        f"GUE steps at a packet need at most 512 grid sites, got {component_grid.size}",
                    )
                )
        if stats.isotropy_directions >= walk.gue_dim:
            out.append(
                Diagnostic("error", "stats.isotropy_directions", "must be below walk.gue_dim")
            )
    if _needs(config, ExperimentName.BORN_CHECK):
        if stats.born_targets_per_distance >= stats.born_dim:
            out.append(Diagnostic("error", "stats.born_targets_per_distance", "must be below stats.born_dim"))
        if stats.born_trials < 1000:
            out.append(Diagnostic("warning", "stats.born_trials", "fewer than 1000 trials; frequencies are noisy"))

    if config.units == UnitsMode.SI and config.experiment not in (
        ExperimentName.MACRO_ESTIMATE,
        ExperimentName.ALL,
    ):
        out.append(
            Diagnostic("error", "units", f"{config.experiment.value} runs in natural units only")
        )
    return out


def validate_file(path: Union[str, Path]) -> List[Diagnostic]:
    """
    Validate a configuration file on its own, without a preset.

    Args:
        path: TOML file

    Returns:
        Schema diagnostics with ``file:line`` locations, or the
        diagnostics of :func:`validate`; never raises
    """
    source = Path(path)
    data, text, problem = _parse_toml(source)
    if problem is not None or data is None:
        return [problem] if problem is not None else []
    try:
        config = ExperimentConfig.model_validate(data)
    except ValidationError as exc:
        return _schema_diagnostics(exc, text, source)
    located = []
    for d in validate(config):
        line = _locate(text, d.location.split("."))
        where = f"{source}:{line}" if line is not None else f"{source}:{d.location}"
        located.append(Diagnostic(d.level, where, d.message))
    return located
