"""Eigensolver for the zero-diagonal symmetric tridiagonal bath family.

The workhorse is the implicit-shift QL iteration with Wilkinson shifts
and eigenvector accumulation, the classic EISPACK imtql2 scheme.  It is
written out by hand because the whole result chain hangs on this one
decomposition; sturm_count and charpoly_eval give an algorithmically
independent slow route (negative-pivot counting and the three-term
characteristic-polynomial recurrence) that the test suite drives
through bisection to confirm the fast route.

eigendecompose always runs on the dimensionless matrix with
off-diagonals 1..N_e and scales the eigenvalues by eta afterwards, so
the coupling quantum (1e-30 J territory) never touches conditioning
and rescaling eta is exact: same vectors bit for bit, values scaled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError
from .hamiltonian import GaugeReducedHamiltonian

__all__ = ["EigenDecomposition", "eigendecompose", "sturm_count", "charpoly_eval"]

MAX_SWEEPS = 50


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Ascending eigenvalues (J) and orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray

    def __post_init__(self) -> None:
        self.values.setflags(write=False)
        self.vectors.setflags(write=False)


def _tridiag_ql(diag: np.ndarray, offdiag: np.ndarray, max_sweeps: int = MAX_SWEEPS):
    """Implicit-shift QL with eigenvector accumulation.

    Eigenvalues land in `d` unordered; `z` columns are the matching
    orthonormal eigenvectors.  Raises NumericalError if any eigenvalue
    needs more than `max_sweeps` sweeps (never observed below a few
    dozen for this matrix family; the cap guards against silent spins).
    """
    d = np.array(diag, dtype=float)
    n = d.size
    e = np.zeros(n)
    e[: n - 1] = offdiag
    z = np.eye(n)
    eps = np.finfo(float).eps

    for l in range(n):
        sweeps = 0
        while True:
            # Find the first decoupled subdiagonal at or beyond l.
            m = l
            while m < n - 1 and abs(e[m]) > eps * (abs(d[m]) + abs(d[m + 1])):
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                raise NumericalError(
                    f"QL iteration failed to converge for size {n} "
                    f"(eigenvalue index {l}, {max_sweeps} sweeps)"
                )
            # Wilkinson shift from the leading 2x2 block.
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                zi1 = z[:, i + 1].copy()
                zi = z[:, i]
                z[:, i + 1] = s * zi + c * zi1
                z[:, i] = c * zi - s * zi1
            else:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return d, z


def _fix_column_signs(z: np.ndarray) -> np.ndarray:
    """Flip eigenvector signs so the largest-magnitude component is positive.

    Removes the one gauge freedom QL leaves, making the decomposition
    bitwise deterministic.
    """
    idx = np.argmax(np.abs(z), axis=0)
    signs = np.sign(z[idx, np.arange(z.shape[1])])
    signs[signs == 0.0] = 1.0
    return z * signs


def eigendecompose(h: GaugeReducedHamiltonian) -> EigenDecomposition:
    """Full spectrum and eigenbasis of a gauge-reduced bath Hamiltonian."""
    if h.dim < 2:
        raise DomainError(f"need dim >= 2, got {h.dim}")
    # Solve the dimensionless matrix (offdiagonals 1..N_e), scale after.
    d, z = _tridiag_ql(np.zeros(h.dim), h.offdiag_reduced())
    order = np.argsort(d, kind="stable")
    values = d[order] * h.eta
    vectors = _fix_column_signs(z[:, order])
    return EigenDecomposition(values=values, vectors=np.ascontiguousarray(vectors))


def sturm_count(h: GaugeReducedHamiltonian, x: float) -> int:
    """Number of eigenvalues strictly below x, by negative-pivot counting.

    The LDL^T pivots of H - xI are d_1 = -x, d_k = -x - b_{k-1}^2 / d_{k-1};
    negatives among them count eigenvalues below x (Sturm sequence).
    Exact pivot zeros are nudged to a tiny positive value, which keeps
    the count strict.  Runs on the matrix scaled by its largest
    off-diagonal so the recurrence never leaves double range.
    """
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    b = h.offdiag_reduced()
    scale = float(b[-1]) if b.size else 1.0
    xs = x / h.eta / scale
    b2 = (b / scale) ** 2
    small = np.finfo(float).eps * (abs(xs) + 1.0)
    count = 0
    d = -xs
    if abs(d) < small:
        d = small
    if d < 0.0:
        count += 1
    for k in range(1, h.dim):
        d = -xs - b2[k - 1] / d
        if abs(d) < small:
            d = small
        if d < 0.0:
            count += 1
    return count


def charpoly_eval(h: GaugeReducedHamiltonian, x: float) -> tuple[float, int]:
    """det(H - xI) as (mantissa, exponent2), value = mantissa * 2**exponent2.

    Three-term recurrence p_k = (a_k - x) p_{k-1} - b_{k-1}^2 p_{k-2}
    over leading principal minors, with exact power-of-two rescaling so
    dimension-500 determinants of 1e-30-scale matrices neither overflow
    nor underflow on the way through.
    """
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    b = h.offdiag
    p_prev, p = 1.0, -x
    exp2 = 0
    for k in range(1, h.dim):
        p_prev, p = p, -x * p - b[k - 1] ** 2 * p_prev
        m = max(abs(p), abs(p_prev))
        if m != 0.0 and not 2.0**-512 < m < 2.0**512:
            _, e = math.frexp(m)
            p = math.ldexp(p, -e)
            p_prev = math.ldexp(p_prev, -e)
            exp2 += e
    return p, exp2
