"""Snapshot coupling frequency and the characteristic bath scales.

A uniformly accelerated detector sees a thermal spectrum with
temperature

    T = hbar A / (2 pi k_B c),

and a condensate snapshot held for a time tau while modulated at
angular frequency omega couples to its phononic bath with frequency

    g = (1 / 2 tau) * ln coth(pi omega c / 4 A).

The characteristic point of that family is fixed by the acceleration
alone.  Taking T_ch = hbar A / (2 pi k_B c) as the bath temperature
gives a thermal de Broglie wavelength lambda_ch, a wavenumber
k_ch = 2 pi / lambda_ch, and through k = sqrt(m omega / hbar) an
angular frequency omega_ch = A / c in which the atomic mass cancels.
The snapshot lifetime follows from the saturated energy-time
uncertainty relation E tau = hbar / 2 with E = hbar omega delta_n:

    tau_ch = c / (A * delta_n),

where delta_n is the canonical occupation fluctuation at T_ch in the
mu -> 0 limit, a pure number

    delta_n = exp(pi / 2) / (exp(pi) - 1).

Substituting omega_ch and tau_ch into g collapses the coupling to a
linear law

    g_ch = sigma * A / (2 c),    sigma = delta_n * ln coth(pi / 4),

so one acceleration pins every scale of the simulated bath, including
the coupling quantum eta = hbar * g_ch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CODATA, PhysicalConstants
from .errors import DomainError

__all__ = [
    "ln_coth",
    "delta_n",
    "sigma",
    "coupling_frequency",
    "coupling_frequency_general",
    "characteristic_frequency",
    "characteristic_time",
    "characteristic_temperature",
    "thermal_wavelength",
    "wavenumber_from_wavelength",
    "CharacteristicScales",
    "characteristic_scales",
]


def ln_coth(x: float) -> float:
    """ln coth(x) for x > 0, stable for both tiny and large arguments.

    Evaluated as log1p(exp(-2x)) - log1p(-exp(-2x)); the naive
    log(cosh/sinh) form loses all precision once coth(x) - 1 drops
    below machine epsilon.
    """
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"ln_coth requires x > 0, got {x!r}")
    q = math.exp(-2.0 * x)
    return math.log1p(q) - math.log1p(-q)


def delta_n() -> float:
    """Occupation fluctuation exp(pi/2) / (exp(pi) - 1) at the characteristic point."""
    return math.exp(math.pi / 2.0) / math.expm1(math.pi)


def sigma() -> float:
    """Dimensionless slope delta_n * ln coth(pi / 4) of the coupling law."""
    return delta_n() * ln_coth(math.pi / 4.0)


def coupling_frequency(a_ch: float, constants: PhysicalConstants = CODATA) -> float:
    """Characteristic coupling frequency g_ch = sigma * A / (2 c), rad/s."""
    if not (math.isfinite(a_ch) and a_ch > 0.0):
        raise DomainError(f"acceleration must be positive, got {a_ch!r}")
    return sigma() * a_ch / (2.0 * constants.c)


def coupling_frequency_general(
    tau: float, omega: float, a: float, constants: PhysicalConstants = CODATA
) -> float:
    """Snapshot coupling g = (1 / 2 tau) ln coth(pi omega c / 4 A), rad/s.

    The general law for arbitrary hold time and modulation frequency;
    at (tau_ch, omega_ch) it reduces to coupling_frequency(a).
    """
    if not (math.isfinite(tau) and tau > 0.0):
        raise DomainError(f"snapshot lifetime must be positive, got {tau!r}")
    if not (math.isfinite(omega) and omega > 0.0):
        raise DomainError(f"modulation frequency must be positive, got {omega!r}")
    if not (math.isfinite(a) and a > 0.0):
        raise DomainError(f"acceleration must be positive, got {a!r}")
    return ln_coth(math.pi * omega * constants.c / (4.0 * a)) / (2.0 * tau)


def characteristic_frequency(a_ch: float, constants: PhysicalConstants = CODATA) -> float:
    """Characteristic angular frequency omega_ch = A / c, rad/s."""
    if not (math.isfinite(a_ch) and a_ch > 0.0):
        raise DomainError(f"acceleration must be positive, got {a_ch!r}")
    return a_ch / constants.c


def characteristic_time(a_ch: float, constants: PhysicalConstants = CODATA) -> float:
    """Snapshot lifetime tau_ch = c / (A * delta_n), seconds."""
    if not (math.isfinite(a_ch) and a_ch > 0.0):
        raise DomainError(f"acceleration must be positive, got {a_ch!r}")
    return constants.c / (a_ch * delta_n())


def characteristic_temperature(a_ch: float, constants: PhysicalConstants = CODATA) -> float:
    """Thermal-spectrum temperature T = hbar A / (2 pi k_B c), kelvin."""
    if not (math.isfinite(a_ch) and a_ch > 0.0):
        raise DomainError(f"acceleration must be positive, got {a_ch!r}")
    return constants.hbar * a_ch / (2.0 * math.pi * constants.k_b * constants.c)


def thermal_wavelength(temperature_kelvin: float, constants: PhysicalConstants = CODATA) -> float:
    """Thermal de Broglie wavelength sqrt(2 pi hbar^2 / (m k_B T)), meters."""
    if not (math.isfinite(temperature_kelvin) and temperature_kelvin > 0.0):
        raise DomainError(f"temperature must be positive, got {temperature_kelvin!r}")
    return math.sqrt(
        2.0 * math.pi * constants.hbar**2 / (constants.m_atom * constants.k_b * temperature_kelvin)
    )


def wavenumber_from_wavelength(wavelength: float) -> float:
    """Wavenumber k = 2 pi / lambda, 1/m."""
    if not (math.isfinite(wavelength) and wavelength > 0.0):
        raise DomainError(f"wavelength must be positive, got {wavelength!r}")
    return 2.0 * math.pi / wavelength


@dataclass(frozen=True)
class CharacteristicScales:
    """Every characteristic scale pinned by one acceleration."""

    a_ch: float  # acceleration, m/s^2
    temperature: float  # T_ch, K
    wavelength: float  # lambda_ch, m
    wavenumber: float  # k_ch, 1/m
    omega: float  # omega_ch, rad/s
    tau: float  # tau_ch, s
    delta_n: float  # occupation fluctuation, dimensionless
    sigma: float  # coupling-law slope, dimensionless
    g: float  # g_ch, rad/s
    eta: float  # hbar * g_ch, J


def characteristic_scales(
    a_ch: float, constants: PhysicalConstants = CODATA
) -> CharacteristicScales:
    """Evaluate the full chain A -> (T, lambda, k, omega, tau, g, eta)."""
    temperature = characteristic_temperature(a_ch, constants)
    wavelength = thermal_wavelength(temperature, constants)
    g = coupling_frequency(a_ch, constants)
    return CharacteristicScales(
        a_ch=a_ch,
        temperature=temperature,
        wavelength=wavelength,
        wavenumber=wavenumber_from_wavelength(wavelength),
        omega=characteristic_frequency(a_ch, constants),
        tau=characteristic_time(a_ch, constants),
        delta_n=delta_n(),
        sigma=sigma(),
        g=g,
        eta=constants.hbar * g,
    )
