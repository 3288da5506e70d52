"""From bath critical points to the simulated temperature-acceleration line.

Each bath size N_e contributes one point to the line.  Solving the bath
gives a critical temperature T_c and the mean excitation number n_bar
at T_c; the acceleration assigned to that point is the one whose
thermal spectrum at temperature kappa A / c would hold the same mean
occupation of a quantum hbar omega_mod / 2,

    A_sim = pi c omega_mod / ln(1 + 1 / n_bar),

so a bath that thermalizes hotter maps to a stronger acceleration.  A
least-squares line through the origin of T_c against A_sim / c then
returns the simulated slope kappa in pK s, to be compared against the
predicted hbar / (2 pi k_B) and the measured 1.17 +/- 0.07 pK s.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .config import SimulationConfig
from .constants import CODATA, PhysicalConstants, kappa_theory
from .coupling import characteristic_temperature, coupling_frequency
from .eigensolve import eigendecompose
from .errors import DomainError, NumericalError
from .hamiltonian import BathSpec, build_hamiltonian, number_operator
from .thermo import TemperatureScan, find_critical_temperature, thermo_curve

__all__ = [
    "EXPERIMENT_KAPPA_PKS",
    "EXPERIMENT_KAPPA_UNCERTAINTY_PKS",
    "BathResult",
    "BathCurve",
    "KappaFit",
    "PipelineResult",
    "acceleration_from_population",
    "unruh_temperature",
    "fit_kappa",
    "run_pipeline",
]

# Measured slope from the accelerated-mirror analogue experiment, pK s.
EXPERIMENT_KAPPA_PKS = 1.17
EXPERIMENT_KAPPA_UNCERTAINTY_PKS = 0.07


@dataclass(frozen=True)
class BathResult:
    """Critical point of one bath, mapped onto the acceleration axis."""

    n_e: int
    eta: float  # J
    t_c: float  # reduced
    t_c_kelvin: float
    n_bar_at_tc: float
    a_sim: float  # m / s^2


@dataclass(frozen=True, eq=False)
class BathCurve:
    """Sampled observables of one bath over the configured grid."""

    n_e: int
    eta: float
    t: np.ndarray  # reduced temperature
    temp_kelvin: np.ndarray
    heat_capacity: np.ndarray  # C / k_B
    energy: np.ndarray  # E in units of eta
    n_bar: np.ndarray


@dataclass(frozen=True)
class KappaFit:
    """Through-origin least-squares slope of T_c against A_sim / c."""

    kappa_pKs: float
    kappa_theory_pKs: float
    ratio: float  # fitted / predicted
    n_points: int
    max_rel_residual: float


@dataclass(frozen=True, eq=False)
class PipelineResult:
    results: tuple[BathResult, ...]
    fit: KappaFit | None
    curves: tuple[BathCurve, ...]


def acceleration_from_population(
    n_bar: float, omega_mod: float, constants: PhysicalConstants = CODATA
) -> float:
    """Acceleration whose thermal occupation of hbar omega_mod / 2 equals n_bar.

    Inverting n_bar = 1 / (exp(pi omega c / A) - 1) gives
    A = pi c omega / ln(1 + 1/n_bar); log1p keeps the large-n_bar
    (small-argument) branch accurate.
    """
    if not (math.isfinite(n_bar) and n_bar > 0.0):
        raise DomainError(f"mean occupation must be positive, got {n_bar!r}")
    if not (math.isfinite(omega_mod) and omega_mod > 0.0):
        raise DomainError(f"modulation frequency must be positive, got {omega_mod!r}")
    return math.pi * constants.c * omega_mod / math.log1p(1.0 / n_bar)


def unruh_temperature(a: float, constants: PhysicalConstants = CODATA) -> float:
    """Temperature hbar A / (2 pi k_B c) seen at proper acceleration A, kelvin."""
    return characteristic_temperature(a, constants)


def fit_kappa(results, constants: PhysicalConstants = CODATA) -> KappaFit:
    """Fit T_c = kappa * (A_sim / c) through the origin over all baths.

    The closed-form slope is sum(T x) / sum(x^2) with x = A_sim / c.
    Needs at least two points with distinct accelerations; a shared
    acceleration means the critical points carry no slope information.
    """
    results = tuple(results)
    if len(results) < 2:
        raise DomainError(f"slope fit needs at least 2 baths, got {len(results)}")
    x = np.array([r.a_sim for r in results]) / constants.c
    y = np.array([r.t_c_kelvin for r in results])
    if float(np.ptp(x)) == 0.0:
        raise DomainError("all baths map to the same acceleration; slope is undetermined")
    kappa_si = float((y * x).sum() / (x * x).sum())
    residual = float(np.max(np.abs(y - kappa_si * x) / y))
    kappa_pks = kappa_si * 1e12
    theory = kappa_theory(constants)
    return KappaFit(
        kappa_pKs=kappa_pks,
        kappa_theory_pKs=theory,
        ratio=kappa_pks / theory,
        n_points=len(results),
        max_rel_residual=residual,
    )


def _solve_bath(args) -> tuple[BathResult, BathCurve]:
    """Solve one bath end to end; module-level so process pools can pickle it."""
    n_e, eta, convention, t_grid, omega_mod, constants = args
    try:
        # Reduced-unit bath: off-diagonals 1..N_e, eigenvalues in units of eta.
        spec = BathSpec(n_e=n_e, eta=1.0)
        decomp = eigendecompose(build_hamiltonian(spec))
        nop = number_operator(spec, convention)
        critical = find_critical_temperature(
            decomp, nop, eta=eta, scan=TemperatureScan(), constants=constants
        )
        curve_points = thermo_curve(decomp, nop, t_grid)
    except NumericalError as exc:
        raise NumericalError(f"bath N_e = {n_e}: {exc}") from exc
    scale = eta / constants.k_b
    curve = BathCurve(
        n_e=n_e,
        eta=eta,
        t=np.array([p.t for p in curve_points]),
        temp_kelvin=np.array([p.t * scale for p in curve_points]),
        heat_capacity=np.array([p.heat_capacity for p in curve_points]),
        energy=np.array([p.energy for p in curve_points]),
        n_bar=np.array([p.n_bar for p in curve_points]),
    )
    result = BathResult(
        n_e=n_e,
        eta=eta,
        t_c=critical.t_c,
        t_c_kelvin=critical.t_c_kelvin,
        n_bar_at_tc=critical.n_bar_at_tc,
        a_sim=acceleration_from_population(critical.n_bar_at_tc, omega_mod, constants),
    )
    return result, curve


def run_pipeline(
    config: SimulationConfig, constants: PhysicalConstants = CODATA
) -> PipelineResult:
    """Solve every configured bath and fit the temperature-acceleration line.

    The coupling quantum eta = hbar * g(A_ch) is shared by all baths.
    With fewer than two baths the per-bath results still come back but
    the fit is None.  Worker order never affects output: results are
    keyed to the configured N_e order in both serial and process-pool
    mode, and each bath is solved by the same deterministic code path.
    """
    eta = constants.hbar * coupling_frequency(config.a_ch, constants)
    t_grid = np.geomspace(config.t_scan.t_min, config.resolved_t_max(), config.t_scan.points)
    jobs = [
        (n_e, eta, config.number_convention, t_grid, config.omega_mod, constants)
        for n_e in config.ne_list
    ]
    if config.parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            solved = list(pool.map(_solve_bath, jobs))
    else:
        solved = [_solve_bath(job) for job in jobs]
    results = tuple(r for r, _ in solved)
    curves = tuple(c for _, c in solved)
    fit = fit_kappa(results, constants) if len(results) >= 2 else None
    return PipelineResult(results=results, fit=fit, curves=curves)
