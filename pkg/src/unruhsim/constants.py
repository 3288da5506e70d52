"""Physical constants, unit conversion, and the reduced-unit bridge.

All thermodynamics in this package runs in reduced units: energies in
units of the bath coupling scale eta and temperatures as t = k_B T / eta.
With eta of order 1e-30 J and critical temperatures of order 1e-7 K a
naive SI evaluation of Boltzmann factors would lose everything to
rounding long before the physics shows up, so SI enters only at the
boundaries (building eta, reporting kelvin, reporting accelerations).

Constant values are CODATA-2018.  The default atomic mass is cesium-133;
it cancels out of every published observable and only feeds diagnostic
length scales.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError, DomainError

__all__ = [
    "PhysicalConstants",
    "CODATA",
    "ReducedScale",
    "kappa_theory",
    "convert_energy",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants used throughout; defaults are CODATA-2018."""

    hbar: float = 1.054571817e-34  # reduced Planck constant, J s
    k_b: float = 1.380649e-23  # Boltzmann constant, J / K
    c: float = 2.99792458e8  # speed of light, m / s
    m_atom: float = 2.20694650e-25  # cesium-133 mass, kg

    def __post_init__(self) -> None:
        for name in ("hbar", "k_b", "c", "m_atom"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"{name} must be finite and positive, got {value!r}")


CODATA = PhysicalConstants()

# J per eV (exact in SI-2019), basis for the energy-unit table.
_EV_JOULE = 1.602176634e-19

_ENERGY_UNIT_JOULE = {
    "J": 1.0,
    "eV": _EV_JOULE,
    "meV": _EV_JOULE * 1e-3,
    "ueV": _EV_JOULE * 1e-6,
    "neV": _EV_JOULE * 1e-9,
    "peV": _EV_JOULE * 1e-12,
}


def kappa_theory(constants: PhysicalConstants = CODATA) -> float:
    """Predicted slope hbar / (2 pi k_B) of T against A/c, in pK s.

    This is the number every simulated fit is judged against; to three
    significant figures it is 1.22 pK s.
    """
    return constants.hbar / (2.0 * math.pi * constants.k_b) * 1e12


def convert_energy(value_joule: float, unit: str) -> float:
    """Express an energy given in joules in `unit` (J, eV, meV, ueV, neV, peV)."""
    if not math.isfinite(value_joule):
        raise DomainError(f"energy must be finite, got {value_joule!r}")
    try:
        scale = _ENERGY_UNIT_JOULE[unit]
    except KeyError:
        known = ", ".join(sorted(_ENERGY_UNIT_JOULE))
        raise ConfigError(f"unknown energy unit {unit!r}; expected one of {known}") from None
    result = value_joule / scale
    if not math.isfinite(result):
        raise DomainError(f"{value_joule!r} J overflows the {unit} scale")
    return result


@dataclass(frozen=True)
class ReducedScale:
    """Two-way bridge between kelvin and reduced temperature t = k_B T / eta."""

    eta: float  # bath coupling quantum, J
    constants: PhysicalConstants = CODATA

    def __post_init__(self) -> None:
        if not (math.isfinite(self.eta) and self.eta > 0.0):
            raise DomainError(f"eta must be finite and positive, got {self.eta!r}")

    def t_of(self, temperature_kelvin: float) -> float:
        """Reduced temperature for an absolute temperature in kelvin."""
        if not (math.isfinite(temperature_kelvin) and temperature_kelvin > 0.0):
            raise DomainError(f"temperature must be positive, got {temperature_kelvin!r}")
        return self.constants.k_b * temperature_kelvin / self.eta

    def kelvin_of(self, t_reduced: float) -> float:
        """Absolute temperature in kelvin for a reduced temperature."""
        if not (math.isfinite(t_reduced) and t_reduced > 0.0):
            raise DomainError(f"reduced temperature must be positive, got {t_reduced!r}")
        return t_reduced * self.eta / self.constants.k_b
