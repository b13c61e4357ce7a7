"""
Macroscopic freezing estimates in SI units.

A sphere of radius r diffusing in a viscous medium (Stokes-Einstein)
moves by sqrt(2 D t) during an observation window t. The packet at the
displaced position is compared with the original through the Fubini-Study
angle arccos(exp(-delta^2 / 8 sigma^2)); when that angle is far below the
angle of one resolvable length, the state is frozen on the classical
manifold.

Scalars are unit-tagged :class:`Quantity` values; constructing a scenario
with a quantity in the wrong unit is rejected.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = [
    "Unit",
    "Quantity",
    "MacroScenario",
    "FreezingReport",
    "REFERENCE_DIFFUSION",
    "TABULATED_VISCOSITY",
    "stokes_einstein",
    "displacement_rms",
    "fs_angle_of_displacement",
    "fs_angle_asymptote",
    "order_of_magnitude",
    "reference_chain",
    "freezing_report",
    "freezing_sweep",
]

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, ClassVar, Dict, Optional, Sequence

import numpy as np
import pandas as pd
import scipy.constants
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_validator

REFERENCE_DIFFUSION = 1e-12
"""Order-of-magnitude diffusion coefficient quoted for a 1 mm sphere in air (m^2/s)."""

TABULATED_VISCOSITY = 1e-5
"""Order-of-magnitude viscosity of air used for the quoted estimate (N s/m^2)."""


class Unit(str, Enum):
    """SI units used by macro scenarios."""

    METER = "m"
    SECOND = "s"
    KELVIN = "K"
    PASCAL_SECOND = "Pa*s"
    JOULE_PER_KELVIN = "J/K"
    SQUARE_METER_PER_SECOND = "m^2/s"
    RADIAN = "rad"


class Quantity(BaseModel):
    """A scalar tagged with its SI unit."""

    model_config = ConfigDict(frozen=True)

    value: float
    unit: Unit

    @classmethod
    def of(cls, value: float, unit: Unit) -> "Quantity":
        return cls(value=value, unit=unit)

    def __str__(self) -> str:
        return f"{self.value:.6g} {self.unit.value}"


class MacroScenario(BaseModel):
    """
    Physical scenario of a macroscopic sphere observed by light scattering.

    Plain numbers are read in the field's SI unit; quantities carrying a
    different unit, and non-positive values, fail validation.
    """

    model_config = ConfigDict(frozen=True)

    UNITS: ClassVar[Dict[str, Unit]] = {
        "radius": Unit.METER,
        "temperature": Unit.KELVIN,
        "viscosity": Unit.PASCAL_SECOND,
        "observation_time": Unit.SECOND,
        "resolution_sigma": Unit.METER,
        "wavelength": Unit.METER,
        "boltzmann": Unit.JOULE_PER_KELVIN,
    }

    radius: Quantity = Quantity(value=1e-3, unit=Unit.METER)
    temperature: Quantity = Quantity(value=293.0, unit=Unit.KELVIN)
    viscosity: Quantity = Quantity(value=1.8e-5, unit=Unit.PASCAL_SECOND)
    observation_time: Quantity = Quantity(value=1e-13, unit=Unit.SECOND)
    resolution_sigma: Quantity = Quantity(value=1e-5, unit=Unit.METER)
    wavelength: Quantity = Quantity(value=1e-5, unit=Unit.METER)
    boltzmann: Quantity = Quantity(value=scipy.constants.k, unit=Unit.JOULE_PER_KELVIN)

    @field_validator("*", mode="before")
    @classmethod
    def _tag_plain_numbers(cls, value: Any, info: ValidationInfo) -> Any:
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return Quantity(value=float(value), unit=cls.UNITS[info.field_name])
        return value

    @field_validator("*")
    @classmethod
    def _check_unit(cls, value: Quantity, info: ValidationInfo) -> Quantity:
        expected = cls.UNITS[info.field_name]
        if value.unit is not expected:
            raise ValueError(
                f"{info.field_name} must be given in {expected.value}, got {value.unit.value}"
            )
        if not (math.isfinite(value.value) and value.value > 0):
            raise ValueError(f"{info.field_name} must be positive, got {value.value}")
        return value

    def with_radius(self, radius: float) -> "MacroScenario":
        """Copy of the scenario with another radius in meters."""
        return self.model_validate({**self.model_dump(), "radius": radius})

    def with_viscosity(self, viscosity: float) -> "MacroScenario":
        """Copy of the scenario with another viscosity in Pa*s."""
        return self.model_validate({**self.model_dump(), "viscosity": viscosity})

    def as_si(self) -> Dict[str, float]:
        """Field values as plain SI floats."""
        return {name: getattr(self, name).value for name in self.UNITS}


def stokes_einstein(s: MacroScenario) -> float:
    """
    Diffusion coefficient D = k_B T / (6 pi eta r) in m^2/s.

    Args:
        s: Scenario

    Returns:
        D
    """
    return (
        s.boltzmann.value
        * s.temperature.value
        / (6.0 * math.pi * s.viscosity.value * s.radius.value)
    )


def displacement_rms(diffusion: float, time: float) -> float:
    """
    Root-mean-square displacement sqrt(2 D t) along one axis.

    Args:
        diffusion: D >= 0 in m^2/s
        time: t >= 0 in s

    Returns:
        Displacement in m
    """
    if diffusion < 0 or time < 0:
        raise ValueError(f"diffusion and time must be non-negative, got {diffusion}, {time}")
    return math.sqrt(2.0 * diffusion * time)


def fs_angle_of_displacement(displacement: float, sigma: float) -> float:
    """
    Fubini-Study angle between packets displaced by ``displacement``.

    Evaluated as atan2(sqrt(1 - exp(-2x)), exp(-x)) with
    x = displacement^2 / 8 sigma^2, which keeps full relative precision
    for displacements many orders below sigma.

    Args:
        displacement: Distance between packet centers
        sigma: Packet width, > 0

    Returns:
        Angle in radians, in [0, pi/2)
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    x = displacement**2 / (8.0 * sigma**2)
    return math.atan2(math.sqrt(-math.expm1(-2.0 * x)), math.exp(-x))


def fs_angle_asymptote(displacement: float, sigma: float) -> float:
    """Small-displacement form of the angle, |displacement| / (2 sigma)."""
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    return abs(displacement) / (2.0 * sigma)


def order_of_magnitude(value: float) -> float:
    """Nearest power of ten, 10^round(log10(value))."""
    if not value > 0:
        raise ValueError(f"value must be positive, got {value}")
    return 10.0 ** round(math.log10(value))


def reference_chain(
    time: float,
    sigma: float,
    diffusion: float = REFERENCE_DIFFUSION,
) -> Dict[str, Any]:
    """
    The freezing chain started from a given diffusion coefficient.

    The displacement is rounded to its order of magnitude before the
    angle is taken, as order-of-magnitude estimates do; the angle of the
    unrounded displacement is reported next to it.

    Args:
        time: Observation window in s
        sigma: Packet width in m
        diffusion: Starting diffusion coefficient in m^2/s

    Returns:
        Mapping with diffusion, displacement, displacement_order,
        angle_at_order, angle, displacement_in_bracket (1e-13..1e-12 m)
        and angle_within_factor_3 (of 1e-7 rad)
    """
    displacement = displacement_rms(diffusion, time)
    rounded = order_of_magnitude(displacement) if displacement > 0 else 0.0
    angle_at_order = fs_angle_of_displacement(rounded, sigma)
    return {
        "diffusion": diffusion,
        "displacement": displacement,
        "displacement_order": rounded,
        "angle_at_order": angle_at_order,
        "angle": fs_angle_of_displacement(displacement, sigma),
        "displacement_in_bracket": 1e-13 <= displacement <= 1e-12,
        "angle_within_factor_3": 1e-7 / 3.0 <= angle_at_order <= 3e-7,
    }


@dataclass(frozen=True)
class FreezingReport:
    """Outcome of the freezing chain for one scenario."""

    scenario: Dict[str, float]
    """Scenario in SI floats."""

    diffusion: float
    """Stokes-Einstein diffusion coefficient (m^2/s)."""

    displacement: float
    """RMS displacement over the observation window (m)."""

    angle: float
    """Fubini-Study angle of the displacement (rad)."""

    angle_asymptote: float
    """Small-displacement asymptote of the angle (rad)."""

    threshold: float
    """Resolvability threshold theta_min (rad)."""

    frozen: bool
    """True when ``angle < threshold``."""

    viscosity_comparison: Dict[str, float] = field(default_factory=dict)
    """Diffusion coefficient at the configured and the tabulated viscosity."""

    chain: Dict[str, Any] = field(default_factory=dict)
    """The chain restarted from the quoted diffusion coefficient."""

    note: str = ""
    """Discrepancy between the direct and the quoted diffusion coefficient."""

    @property
    def verdict(self) -> str:
        return "frozen" if self.frozen else "resolvable"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scenario": self.scenario,
            "diffusion": self.diffusion,
            "displacement": self.displacement,
            "angle": self.angle,
            "angle_asymptote": self.angle_asymptote,
            "threshold": self.threshold,
            "verdict": self.verdict,
            "viscosity_comparison": self.viscosity_comparison,
            "chain": self.chain,
            "note": self.note,
        }

    def summary(self) -> str:
        """
        Generate a human-readable summary of the report.

        Returns:
            Formatted string with the chain and the verdict
        """
        return (
            f"Freezing estimate (r = {self.scenario['radius']:.3g} m):\n"
            f"  D (Stokes-Einstein): {self.diffusion:.3e} m^2/s\n"
            f"  Displacement: {self.displacement:.3e} m\n"
            f"  FS angle: {self.angle:.3e} rad (asymptote {self.angle_asymptote:.3e})\n"
            f"  Threshold: {self.threshold:.3e} rad -> {self.verdict}\n"
            f"  From D = {self.chain.get('diffusion', float('nan')):.0e}: "
            f"displacement {self.chain.get('displacement', float('nan')):.3e} m, "
            f"angle {self.chain.get('angle_at_order', float('nan')):.3e} rad\n"
            f"  Note: {self.note}"
        )


def _threshold(s: MacroScenario, threshold: Optional[float]) -> float:
    if threshold is not None:
        if not threshold > 0:
            raise ValueError(f"threshold must be positive, got {threshold}")
        return threshold
    return fs_angle_of_displacement(s.wavelength.value, s.resolution_sigma.value)


def freezing_report(
    s: MacroScenario,
    threshold: Optional[float] = None,
    reference_diffusion: float = REFERENCE_DIFFUSION,
    tabulated_viscosity: float = TABULATED_VISCOSITY,
) -> FreezingReport:
    """
    Run the chain D -> displacement -> angle and compare with theta_min.

    Args:
        s: Scenario
        threshold: theta_min in rad; defaults to the angle of one wavelength
        reference_diffusion: Quoted diffusion coefficient restarted through the chain
        tabulated_viscosity: Alternative viscosity reported next to the configured one

    Returns:
        FreezingReport
    """
    sigma = s.resolution_sigma.value
    diffusion = stokes_einstein(s)
    displacement = displacement_rms(diffusion, s.observation_time.value)
    angle = fs_angle_of_displacement(displacement, sigma)
    theta_min = _threshold(s, threshold)
    alternative = stokes_einstein(s.with_viscosity(tabulated_viscosity))
    note = (
        f"Stokes-Einstein gives D = {diffusion:.2e} m^2/s "
        f"({alternative:.2e} m^2/s at eta = {tabulated_viscosity:g} Pa*s), "
        f"a factor {reference_diffusion / diffusion:.0f} below the quoted "
        f"D ~ {reference_diffusion:.0e} m^2/s; both chains are reported."
    )
    return FreezingReport(
        scenario=s.as_si(),
        diffusion=diffusion,
        displacement=displacement,
        angle=angle,
        angle_asymptote=fs_angle_asymptote(displacement, sigma),
        threshold=theta_min,
        frozen=angle < theta_min,
        viscosity_comparison={
            "configured": diffusion,
            "tabulated": alternative,
            "configured_viscosity": s.viscosity.value,
            "tabulated_viscosity": tabulated_viscosity,
        },
        chain=reference_chain(s.observation_time.value, sigma, reference_diffusion),
        note=note,
    )


def freezing_sweep(
    s: MacroScenario,
    radii: Sequence[float],
    threshold: Optional[float] = None,
) -> pd.DataFrame:
    """
    The freezing chain over a range of radii.

    Args:
        s: Base scenario
        radii: Radii in m
        threshold: theta_min in rad; defaults to the angle of one wavelength

    Returns:
        DataFrame with radius, diffusion, displacement, angle, verdict,
        sorted by radius
    """
    theta_min = _threshold(s, threshold)
    rows = []
    for radius in np.sort(np.asarray(radii, dtype=float)):
        scenario = s.with_radius(float(radius))
        diffusion = stokes_einstein(scenario)
        displacement = displacement_rms(diffusion, scenario.observation_time.value)
        angle = fs_angle_of_displacement(displacement, scenario.resolution_sigma.value)
        rows.append(
            {
                "radius": float(radius),
                "diffusion": diffusion,
                "displacement": displacement,
                "angle": angle,
                "verdict": "frozen" if angle < theta_min else "resolvable",
            }
        )
    return pd.DataFrame(rows)
