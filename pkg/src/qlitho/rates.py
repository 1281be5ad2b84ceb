"""Photon-flux and absorption-probability arithmetic for entangled exposure.

All quantities are SI. The photon energy is taken as h c / lambda, which is
the same thing as hbar omega but uses the wavelength directly.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass

from .errors import NonPositiveInput

PLANCK = 6.62607015e-34  # J s
LIGHT_SPEED = 299792458.0  # m / s

DEFAULT_WAVELENGTH = 200e-9
DEFAULT_CROSS_SECTION = 1e-19
DEFAULT_PACKET_AREA = 1e-12
DEFAULT_COHERENCE_TIME = 1e-12
DEFAULT_N = 2

UNITS = {
    "photon_energy": "J",
    "critical_intensity": "W/m^2",
    "max_flux": "photons/s",
    "max_intensity": "W/m^2",
    "spot_area": "m^2",
    "coverage_ratio": "1",
    "joint_bound": "1",
}


class CoverageWarning(UserWarning):
    """The absorption cross-section is larger than the spot it should fit in."""


def _positive(**values):
    for name, v in values.items():
        if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
            raise NonPositiveInput(f"{name} must be a positive finite number, got {v!r}")


def _photon_number(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise NonPositiveInput(f"photon number must be an integer >= 1, got {n!r}")
    return int(n)


@dataclass(frozen=True)
class FeasibilityParams:
    wavelength: float = DEFAULT_WAVELENGTH
    packet_area: float = DEFAULT_PACKET_AREA
    coherence_time: float = DEFAULT_COHERENCE_TIME
    cross_section: float = DEFAULT_CROSS_SECTION
    n: int = DEFAULT_N

    def __post_init__(self):
        _positive(
            wavelength=self.wavelength,
            packet_area=self.packet_area,
            coherence_time=self.coherence_time,
            cross_section=self.cross_section,
        )
        _photon_number(self.n)

    @classmethod
    def from_lab_units(cls, wavelength_nm, packet_area_m2, coherence_time_fs, cross_section_m2, n):
        return cls(wavelength_nm * 1e-9, packet_area_m2, coherence_time_fs * 1e-15, cross_section_m2, n)

    def to_lab_units(self) -> dict:
        return {
            "wavelength_nm": self.wavelength / 1e-9,
            "packet_area_m2": self.packet_area,
            "coherence_time_fs": self.coherence_time / 1e-15,
            "cross_section_m2": self.cross_section,
            "n": self.n,
        }


@dataclass(frozen=True)
class FeasibilityReport:
    """Derived thresholds for one parameter set.

    ``coverage_ratio`` and ``joint_bound`` are upper bounds whenever the
    cross-section input is itself an upper bound.
    """

    params: FeasibilityParams
    photon_energy: float
    critical_intensity: float
    max_flux: float
    max_intensity: float
    spot_area: float
    coverage_ratio: float
    joint_bound: float

    @property
    def coverage_exceeds_unity(self) -> bool:
        return self.coverage_ratio > 1.0

    def to_dict(self) -> dict:
        fields = {name: getattr(self, name) for name in UNITS}
        return {
            "params": asdict(self.params),
            **fields,
            "coverage_exceeds_unity": self.coverage_exceeds_unity,
            "units": dict(UNITS),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def photon_energy(wavelength: float) -> float:
    _positive(wavelength=wavelength)
    return PLANCK * LIGHT_SPEED / wavelength


def critical_intensity(params: FeasibilityParams) -> float:
    """One photon per packet area per coherence time: hbar omega / (A tau)."""
    return photon_energy(params.wavelength) / (params.packet_area * params.coherence_time)


def max_flux(params: FeasibilityParams) -> float:
    # at most one N-photon packet per coherence time
    return params.n / params.coherence_time


def max_intensity(params: FeasibilityParams) -> float:
    return params.n * critical_intensity(params)


def spot_area(wavelength: float, n: int) -> float:
    """Smallest spot an N-photon fringe can resolve, (lambda / 2N)^2."""
    _positive(wavelength=wavelength)
    n = _photon_number(n)
    return (wavelength / (2 * n)) ** 2


def coverage_ratio(params: FeasibilityParams) -> float:
    r = params.cross_section / spot_area(params.wavelength, params.n)
    if r > 1.0:
        warnings.warn(
            f"cross-section {params.cross_section:g} m^2 exceeds the spot area; coverage ratio {r:g} > 1",
            CoverageWarning,
            stacklevel=2,
        )
    return r


def joint_absorption_bound(r: float, n: int) -> float:
    """Chance the same absorber also takes the remaining N-1 photons: r^(N-1)."""
    _positive(r=r)
    n = _photon_number(n)
    return r ** (n - 1)


def feasibility_report(params: FeasibilityParams | None = None) -> FeasibilityReport:
    params = params or FeasibilityParams()
    ic = critical_intensity(params)
    r = coverage_ratio(params)
    return FeasibilityReport(
        params=params,
        photon_energy=photon_energy(params.wavelength),
        critical_intensity=ic,
        max_flux=max_flux(params),
        max_intensity=params.n * ic,
        spot_area=spot_area(params.wavelength, params.n),
        coverage_ratio=r,
        joint_bound=joint_absorption_bound(r, params.n),
    )


def format_report(report: FeasibilityReport) -> str:
    p = report.params
    rows = [
        ("wavelength", p.wavelength, "m"),
        ("packet area A", p.packet_area, "m^2"),
        ("coherence time tau", p.coherence_time, "s"),
        ("cross-section sigma", p.cross_section, "m^2"),
        ("photon number N", p.n, ""),
        ("photon energy", report.photon_energy, UNITS["photon_energy"]),
        ("critical intensity I_c", report.critical_intensity, UNITS["critical_intensity"]),
        ("max flux N/tau", report.max_flux, UNITS["max_flux"]),
        ("max intensity N*I_c", report.max_intensity, UNITS["max_intensity"]),
        ("spot area (lambda/2N)^2", report.spot_area, UNITS["spot_area"]),
        ("coverage ratio r (upper bound)", report.coverage_ratio, ""),
        ("joint bound r^(N-1) (upper bound)", report.joint_bound, ""),
    ]
    width = max(len(name) for name, _, _ in rows)
    lines = []
    for name, value, unit in rows:
        shown = str(value) if isinstance(value, int) else f"{value:.6g}"
        lines.append(f"{name:<{width}}  {shown:>14}  {unit}".rstrip())
    if report.coverage_exceeds_unity:
        lines.append("WARNING: coverage ratio exceeds 1")
    return "\n".join(lines)
