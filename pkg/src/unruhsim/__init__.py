"""Finite thermal baths, critical temperatures, and the simulated Unruh slope.

The package builds the pair-creation Hamiltonian of a family of finite
Bose-Einstein thermal baths, extracts each bath's critical temperature
from the maximum of its canonical heat capacity, maps the mean phononic
excitation number at that point onto an effective acceleration, and
fits the resulting temperature-acceleration line to recover
kappa = hbar / (2 pi k_B).  A separate module verifies the invariance
of the pair-creation form under the Rindler transformation.
"""

from .config import DEFAULT_NE_LIST, CurveGrid, SimulationConfig, load_config
from .constants import CODATA, PhysicalConstants, ReducedScale, convert_energy, kappa_theory
from .coupling import (
    CharacteristicScales,
    characteristic_frequency,
    characteristic_scales,
    characteristic_temperature,
    characteristic_time,
    coupling_frequency,
    coupling_frequency_general,
    delta_n,
    ln_coth,
    sigma,
    thermal_wavelength,
    wavenumber_from_wavelength,
)
from .eigensolve import EigenDecomposition, charpoly_eval, eigendecompose, sturm_count
from .errors import ConfigError, DomainError, NumericalError
from .hamiltonian import (
    BathSpec,
    GaugeReducedHamiltonian,
    NumberOperatorDiagonal,
    build_dense_complex,
    build_hamiltonian,
    gauge_phases,
    number_operator,
)
from .rindler import (
    KERNEL_COEFFS,
    MONOMIALS,
    BogoliubovTransform,
    fock_truncated_check,
    invariance_residual,
    rindler_transform,
    symplectic_residual,
    transform_quadratic,
)
from .thermo import (
    CriticalPoint,
    TemperatureScan,
    ThermalObservables,
    count_local_maxima,
    find_critical_temperature,
    heat_capacity,
    internal_energy,
    log_partition,
    mean_excitations,
    thermo_curve,
)
from .unruh import (
    EXPERIMENT_KAPPA_PKS,
    EXPERIMENT_KAPPA_UNCERTAINTY_PKS,
    BathCurve,
    BathResult,
    KappaFit,
    PipelineResult,
    acceleration_from_population,
    fit_kappa,
    run_pipeline,
    unruh_temperature,
)
from .output import (
    format_float,
    write_bath_curves,
    write_csv,
    write_invariance_table,
    write_json,
    write_kappa_fit,
    write_spectrum,
    write_tc_table,
)

__version__ = "0.1.0"
