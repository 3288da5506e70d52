"""Canonical-ensemble observables and critical-temperature extraction.

Observables take an eigenvalue array and an inverse temperature whose
units must cancel; the pipeline always passes eigenvalues in units of
eta together with beta = 1/t, t = k_B T / eta.  Every sum runs over
Boltzmann weights shifted by the ground state,

    w_l = exp(-beta (eps_l - eps_min)),

so nothing underflows at large beta, and the log-partition function is
assembled as -beta eps_min + log(sum w).  Heat capacity uses the
fluctuation form

    C / k_B = beta^2 (<E^2> - <E>^2),

which is the exact temperature derivative of the internal energy, not a
finite difference; the derivative identity is enforced by the test
suite.  The critical temperature of a bath is the location of its
single heat-capacity maximum, found by a coarse logarithmic scan
followed by golden-section refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CODATA, PhysicalConstants
from .eigensolve import EigenDecomposition
from .errors import DomainError, NumericalError
from .hamiltonian import NumberOperatorDiagonal

__all__ = [
    "log_partition",
    "internal_energy",
    "heat_capacity",
    "mean_excitations",
    "ThermalObservables",
    "CriticalPoint",
    "TemperatureScan",
    "thermo_curve",
    "find_critical_temperature",
    "count_local_maxima",
]

_GOLDEN_REL_TOL = 1e-8


def _check_beta(beta: float) -> float:
    if not (math.isfinite(beta) and beta > 0.0):
        raise DomainError(f"beta must be finite and positive, got {beta!r}")
    return float(beta)


def _values_array(values) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise DomainError("values must be a non-empty 1-d array")
    if not np.all(np.isfinite(v)):
        raise DomainError("values must be finite")
    return v


def _shifted_weights(values: np.ndarray, beta: float) -> tuple[np.ndarray, float]:
    """Boltzmann weights relative to the ground state, and the shift."""
    e_min = float(values.min())
    return np.exp(-beta * (values - e_min)), e_min


def log_partition(values, beta: float) -> float:
    """ln Z at inverse temperature beta, stable for arbitrarily large beta."""
    v = _values_array(values)
    beta = _check_beta(beta)
    w, e_min = _shifted_weights(v, beta)
    return -beta * e_min + math.log(float(w.sum()))


def internal_energy(values, beta: float) -> float:
    """Canonical mean energy <E> = sum eps w / Z."""
    v = _values_array(values)
    beta = _check_beta(beta)
    w, _ = _shifted_weights(v, beta)
    return float((v * w).sum() / w.sum())


def heat_capacity(values, beta: float) -> float:
    """C / k_B = beta^2 Var(E), the fluctuation form of dE/dT.

    The variance is centered before squaring, so the result stays
    accurate even when the spectrum sits far from zero.
    """
    v = _values_array(values)
    beta = _check_beta(beta)
    w, _ = _shifted_weights(v, beta)
    z = w.sum()
    mean = (v * w).sum() / z
    var = (((v - mean) ** 2) * w).sum() / z
    return float(beta * beta * var)


def mean_excitations(decomp: EigenDecomposition, nop: NumberOperatorDiagonal, beta: float) -> float:
    """Thermal mean of the excitation-number operator.

    <N> = sum_l w_l <psi_l| N |psi_l> / Z with diagonal N, so the
    per-level expectations are sums of squared eigenvector components
    weighted by the number diagonal.
    """
    beta = _check_beta(beta)
    if decomp.vectors.shape[0] != nop.entries.size:
        raise DomainError(
            f"dimension mismatch: {decomp.vectors.shape[0]} eigenvector components "
            f"vs {nop.entries.size} number-operator entries"
        )
    w, _ = _shifted_weights(decomp.values, beta)
    level_n = (decomp.vectors**2 * nop.entries[:, None]).sum(axis=0)
    return float((level_n * w).sum() / w.sum())


@dataclass(frozen=True)
class ThermalObservables:
    """One temperature point of a bath curve (reduced units)."""

    t: float
    log_z: float
    energy: float
    heat_capacity: float
    n_bar: float


@dataclass(frozen=True)
class CriticalPoint:
    """Heat-capacity maximum of one bath."""

    t_c: float  # reduced critical temperature
    t_c_kelvin: float
    c_max: float  # C / k_B at the maximum
    n_bar_at_tc: float


@dataclass(frozen=True)
class TemperatureScan:
    """Coarse-scan window for the critical-temperature search.

    t_max = None widens the window to 10 * N_e, which holds the
    heat-capacity peak of every bath in this family with a wide margin.
    """

    t_min: float = 1e-2
    t_max: float | None = None
    points: int = 2000

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t_min) and self.t_min > 0.0):
            raise DomainError(f"t_min must be positive, got {self.t_min!r}")
        if self.t_max is not None and not (math.isfinite(self.t_max) and self.t_max > self.t_min):
            raise DomainError(f"t_max must exceed t_min, got {self.t_max!r}")
        if self.points < 100:
            raise DomainError(f"scan needs at least 100 points, got {self.points}")


def _golden_max(f, lo: float, hi: float, rel_tol: float = _GOLDEN_REL_TOL) -> float:
    """Golden-section search for the maximum of a unimodal f on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    invphi2 = (3.0 - math.sqrt(5.0)) / 2.0
    h = hi - lo
    c = lo + invphi2 * h
    d = lo + invphi * h
    fc = f(c)
    fd = f(d)
    while h > rel_tol * c:
        h *= invphi
        if fc > fd:
            hi = d
            d, fd = c, fc
            c = lo + invphi2 * h
            fc = f(c)
        else:
            lo = c
            c, fc = d, fd
            d = lo + invphi * h
            fd = f(d)
    return 0.5 * (lo + hi)


def thermo_curve(
    decomp: EigenDecomposition, nop: NumberOperatorDiagonal, t_grid
) -> list[ThermalObservables]:
    """Evaluate all observables on a grid of reduced temperatures."""
    grid = np.asarray(t_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("t_grid must be a non-empty 1-d array")
    if not np.all(np.isfinite(grid)) or not np.all(grid > 0.0):
        raise DomainError("t_grid must be positive and finite")
    if not np.all(np.diff(grid) > 0.0):
        raise DomainError("t_grid must be strictly increasing")
    v = decomp.values
    # <psi_l| N |psi_l> is beta-independent; hoist it out of the loop.
    level_n = (decomp.vectors**2 * nop.entries[:, None]).sum(axis=0)
    out = []
    for t in grid:
        beta = 1.0 / t
        w, e_min = _shifted_weights(v, beta)
        z = float(w.sum())
        mean = float((v * w).sum() / z)
        var = float((((v - mean) ** 2) * w).sum() / z)
        out.append(
            ThermalObservables(
                t=float(t),
                log_z=-beta * e_min + math.log(z),
                energy=mean,
                heat_capacity=beta * beta * var,
                n_bar=float((level_n * w).sum() / z),
            )
        )
    return out


def find_critical_temperature(
    decomp: EigenDecomposition,
    nop: NumberOperatorDiagonal,
    *,
    eta: float,
    scan: TemperatureScan = TemperatureScan(),
    constants: PhysicalConstants = CODATA,
) -> CriticalPoint:
    """Locate the heat-capacity maximum of a bath.

    `decomp` must hold eigenvalues in units of eta; `eta` (J) converts
    the reduced critical temperature to kelvin.  Raises NumericalError
    when the spectrum is flat (no transition), when the maximum sits on
    the scan boundary (window too narrow), or when the refined point
    fails the concavity check.
    """
    if not (math.isfinite(eta) and eta > 0.0):
        raise DomainError(f"eta must be finite and positive, got {eta!r}")
    v = decomp.values
    if float(np.ptp(v)) == 0.0:
        raise NumericalError("flat spectrum: heat capacity vanishes, no transition to locate")

    t_max = scan.t_max if scan.t_max is not None else 10.0 * (v.size - 1)
    if t_max <= scan.t_min:
        raise DomainError(f"scan window [{scan.t_min}, {t_max}] is empty")
    grid = np.geomspace(scan.t_min, t_max, scan.points)

    def c_of_t(t: float) -> float:
        return heat_capacity(v, 1.0 / t)

    coarse = np.array([c_of_t(t) for t in grid])
    i = int(np.argmax(coarse))
    if i == 0 or i == grid.size - 1:
        raise NumericalError(
            f"heat-capacity maximum at scan boundary t = {grid[i]:.6g}; "
            f"widen [t_min, t_max] = [{scan.t_min:.6g}, {t_max:.6g}]"
        )

    t_c = _golden_max(c_of_t, float(grid[i - 1]), float(grid[i + 1]))
    c_max = c_of_t(t_c)
    # Concavity at the refined point, on a scale well above golden noise.
    h = 1e-3 * t_c
    if not (c_of_t(t_c - h) - 2.0 * c_max + c_of_t(t_c + h) < 0.0):
        raise NumericalError(f"refined point t = {t_c:.6g} is not a heat-capacity maximum")

    return CriticalPoint(
        t_c=t_c,
        t_c_kelvin=t_c * eta / constants.k_b,
        c_max=c_max,
        n_bar_at_tc=mean_excitations(decomp, nop, 1.0 / t_c),
    )


def count_local_maxima(y) -> int:
    """Strict interior local maxima of a sampled curve (unimodality check)."""
    arr = np.asarray(y, dtype=float)
    if arr.size < 3:
        return 0
    inner = arr[1:-1]
    return int(np.count_nonzero((inner > arr[:-2]) & (inner > arr[2:])))
