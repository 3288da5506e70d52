"""Pair-basis bath Hamiltonian and its gauge-reduced tridiagonal form.

A bath that holds at most N_e phonon pairs lives in the basis
{|n, n> : n = 0..N_e} of equal occupation in the two counter-propagating
modes.  The pair-creation coupling gives a tridiagonal matrix with
purely imaginary entries above the diagonal,

    H[n-1, n] = -i n eta,    H[n, n-1] = +i n eta,    H[n, n] = 0,

with eta = hbar g the coupling quantum.  The diagonal unitary
D = diag(i^0, i^1, ..., i^{N_e}) strips the phases: D^H H D is real
symmetric tridiagonal with zero diagonal and off-diagonal entries
n * eta.  Eigenvalues are unchanged and eigenvector component
magnitudes are preserved, so all production code works on the real
form; the dense complex matrix exists to validate that reduction and
is capped at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DomainError

__all__ = [
    "BathSpec",
    "GaugeReducedHamiltonian",
    "NumberOperatorDiagonal",
    "build_hamiltonian",
    "build_dense_complex",
    "gauge_phases",
    "number_operator",
]

# Above this size the dense complex route is pure waste; it exists only
# to cross-check the gauge reduction.
_DENSE_MAX_NE = 64

_CONVENTIONS = ("pairs", "quanta")


@dataclass(frozen=True)
class BathSpec:
    """A finite bath: pair capacity N_e and coupling quantum eta (J)."""

    n_e: int
    eta: float

    def __post_init__(self) -> None:
        if not isinstance(self.n_e, (int, np.integer)) or isinstance(self.n_e, bool):
            raise DomainError(f"n_e must be an integer, got {self.n_e!r}")
        if self.n_e < 1:
            raise DomainError(
                f"n_e must be >= 1, got {self.n_e}; a zero-pair bath is a single "
                "level with no dynamics"
            )
        if not (np.isfinite(self.eta) and self.eta > 0.0):
            raise DomainError(f"eta must be finite and positive, got {self.eta!r}")

    @property
    def dim(self) -> int:
        return self.n_e + 1


@dataclass(frozen=True, eq=False)
class GaugeReducedHamiltonian:
    """Real symmetric tridiagonal form: zero diagonal, offdiag[j-1] = j * eta.

    The ladder structure is validated on construction, which lets the
    solvers work on the exact dimensionless off-diagonals 1..N_e instead
    of dividing eta back out (and picking up rounding in the last bit).
    """

    dim: int
    offdiag: np.ndarray  # length dim - 1, joules
    eta: float

    def __post_init__(self) -> None:
        expected = np.arange(1, self.dim, dtype=float) * self.eta
        if self.offdiag.shape != expected.shape or not np.array_equal(self.offdiag, expected):
            raise DomainError("offdiag must be exactly (1..dim-1) * eta")
        self.offdiag.setflags(write=False)

    def offdiag_reduced(self) -> np.ndarray:
        """Off-diagonals in units of eta: exactly 1, 2, ..., dim - 1."""
        return np.arange(1, self.dim, dtype=float)


@dataclass(frozen=True, eq=False)
class NumberOperatorDiagonal:
    """Diagonal of the excitation-number operator in the pair basis."""

    entries: np.ndarray
    convention: str

    def __post_init__(self) -> None:
        self.entries.setflags(write=False)


def build_hamiltonian(spec: BathSpec) -> GaugeReducedHamiltonian:
    """Gauge-reduced bath Hamiltonian for `spec`."""
    off = np.arange(1, spec.dim, dtype=float) * spec.eta
    return GaugeReducedHamiltonian(dim=spec.dim, offdiag=off, eta=spec.eta)


def build_dense_complex(spec: BathSpec) -> np.ndarray:
    """Dense complex Hermitian matrix in the raw pair basis (validation only)."""
    if spec.n_e > _DENSE_MAX_NE:
        raise DomainError(
            f"dense complex form is capped at n_e <= {_DENSE_MAX_NE}, got {spec.n_e}; "
            "use build_hamiltonian for production sizes"
        )
    h = np.zeros((spec.dim, spec.dim), dtype=complex)
    n = np.arange(1, spec.dim, dtype=float)
    h[n.astype(int) - 1, n.astype(int)] = -1j * n * spec.eta
    h[n.astype(int), n.astype(int) - 1] = 1j * n * spec.eta
    return h


def gauge_phases(dim: int) -> np.ndarray:
    """Diagonal of the phase gauge D = diag(i^0, ..., i^{dim-1})."""
    if dim < 1:
        raise DomainError(f"dim must be >= 1, got {dim}")
    return 1j ** np.arange(dim)


def number_operator(spec: BathSpec, convention: str = "pairs") -> NumberOperatorDiagonal:
    """Excitation-number diagonal: n per basis state (pairs) or 2n (quanta)."""
    if convention not in _CONVENTIONS:
        raise ConfigError(
            f"unknown number convention {convention!r}; expected one of {_CONVENTIONS}"
        )
    n = np.arange(spec.dim, dtype=float)
    if convention == "quanta":
        n = 2.0 * n
    return NumberOperatorDiagonal(entries=n, convention=convention)
