import math

import numpy as np
import pytest

from unruhsim import (
    BathSpec,
    NumericalError,
    build_hamiltonian,
    charpoly_eval,
    eigendecompose,
    sturm_count,
)
from unruhsim.eigensolve import _tridiag_ql

from _oracles import bisection_eigenvalues

ETA = 1.7251395686857924e-30


def _dense(h):
    return np.diag(h.offdiag, 1) + np.diag(h.offdiag, -1)


def test_two_level_decomposition_in_closed_form():
    h = build_hamiltonian(BathSpec(n_e=1, eta=1.0))
    decomp = eigendecompose(h)
    assert np.allclose(decomp.values, [-1.0, 1.0], atol=1e-14, rtol=0.0)
    s = 1.0 / math.sqrt(2.0)
    # sign convention: largest-magnitude component of each column positive
    expected = np.array([[s, s], [-s, s]])
    assert np.allclose(decomp.vectors, expected, atol=1e-14, rtol=0.0)


def test_three_level_values():
    h = build_hamiltonian(BathSpec(n_e=2, eta=1.0))
    values = eigendecompose(h).values
    r5 = math.sqrt(5.0)
    assert np.allclose(values, [-r5, 0.0, r5], atol=1e-12, rtol=0.0)


@pytest.mark.parametrize("n_e", [1, 2, 3, 8, 12, 64, 200])
def test_residual_and_orthonormality(n_e):
    h = build_hamiltonian(BathSpec(n_e=n_e, eta=ETA))
    decomp = eigendecompose(h)
    dense = _dense(h)
    scale = float(np.max(np.abs(decomp.values)))
    residual = dense @ decomp.vectors - decomp.vectors * decomp.values
    assert float(np.max(np.abs(residual))) <= 1e-12 * scale
    gram = decomp.vectors.T @ decomp.vectors
    assert float(np.max(np.abs(gram - np.eye(h.dim)))) <= 1e-12
    assert np.all(np.diff(decomp.values) > 0.0)


@pytest.mark.parametrize("n_e", [1, 2, 5, 12, 31, 100])
def test_spectrum_is_symmetric_about_zero(n_e):
    h = build_hamiltonian(BathSpec(n_e=n_e, eta=ETA))
    values = eigendecompose(h).values
    scale = float(np.max(np.abs(values)))
    assert float(np.max(np.abs(values + values[::-1]))) <= 1e-12 * scale
    if h.dim % 2 == 1:
        assert float(np.min(np.abs(values))) <= 1e-12 * scale
    else:
        assert float(np.min(np.abs(values))) > 1e-3 * ETA


def test_eta_rescaling_is_exact():
    base = eigendecompose(build_hamiltonian(BathSpec(n_e=40, eta=1.0)))
    for alpha in (ETA, 2.5, 1e-12):
        scaled = eigendecompose(build_hamiltonian(BathSpec(n_e=40, eta=alpha)))
        assert np.array_equal(scaled.vectors, base.vectors)
        assert np.array_equal(scaled.values, base.values * alpha)


def test_decomposition_is_deterministic():
    h = build_hamiltonian(BathSpec(n_e=64, eta=ETA))
    a = eigendecompose(h)
    b = eigendecompose(h)
    assert np.array_equal(a.values, b.values)
    assert np.array_equal(a.vectors, b.vectors)


def test_eigenvector_sign_convention():
    for n_e in (3, 10, 33):
        decomp = eigendecompose(build_hamiltonian(BathSpec(n_e=n_e, eta=1.0)))
        idx = np.argmax(np.abs(decomp.vectors), axis=0)
        assert np.all(decomp.vectors[idx, np.arange(n_e + 1)] > 0.0)


def test_ql_sweep_cap_raises():
    with pytest.raises(NumericalError):
        _tridiag_ql(np.zeros(4), np.array([1.0, 2.0, 3.0]), max_sweeps=0)


def test_sturm_count_two_level():
    h = build_hamiltonian(BathSpec(n_e=1, eta=1.0))
    assert sturm_count(h, 0.0) == 1
    assert sturm_count(h, -10.0) == 0
    assert sturm_count(h, 10.0) == 2


def test_sturm_count_three_level():
    h = build_hamiltonian(BathSpec(n_e=2, eta=1.0))
    assert sturm_count(h, -10.0) == 0
    assert sturm_count(h, 10.0) == 3
    # just below and above the interior eigenvalue at 0
    assert sturm_count(h, -1e-9) == 1
    assert sturm_count(h, 1e-9) == 2


@pytest.mark.parametrize("n_e", range(1, 13))
def test_sturm_count_agrees_with_spectrum(n_e):
    h = build_hamiltonian(BathSpec(n_e=n_e, eta=ETA))
    values = eigendecompose(h).values
    scale = float(np.max(np.abs(values)))
    rng = np.random.default_rng(100 + n_e)
    for _ in range(100):
        x = float(rng.uniform(-1.2, 1.2)) * scale
        assert sturm_count(h, x) == int(np.sum(values < x))


@pytest.mark.parametrize("n_e", range(1, 13))
def test_bisection_oracle_agrees_with_ql(n_e):
    h = build_hamiltonian(BathSpec(n_e=n_e, eta=ETA))
    values = eigendecompose(h).values
    oracle = bisection_eigenvalues(h)
    scale = float(np.max(np.abs(values)))
    assert float(np.max(np.abs(values - oracle))) <= 1e-12 * scale


def test_charpoly_two_level_at_zero():
    h = build_hamiltonian(BathSpec(n_e=1, eta=1.0))
    mantissa, exponent = charpoly_eval(h, 0.0)
    assert math.ldexp(mantissa, exponent) == -1.0


def test_charpoly_three_level_at_zero_vanishes():
    h = build_hamiltonian(BathSpec(n_e=2, eta=1.0))
    mantissa, _ = charpoly_eval(h, 0.0)
    assert mantissa == 0.0


def test_charpoly_roots_are_the_eigenvalues():
    h = build_hamiltonian(BathSpec(n_e=1, eta=2.0))
    for root in (-2.0, 2.0):
        mantissa, _ = charpoly_eval(h, root)
        assert mantissa == 0.0


def test_charpoly_sign_tracks_the_sturm_count():
    h = build_hamiltonian(BathSpec(n_e=6, eta=1.0))
    values = eigendecompose(h).values
    rng = np.random.default_rng(19)
    for _ in range(50):
        x = float(rng.uniform(-8.0, 8.0))
        if float(np.min(np.abs(values - x))) < 1e-6:
            continue
        mantissa, _ = charpoly_eval(h, x)
        below = sturm_count(h, x)
        assert math.copysign(1.0, mantissa) == (-1.0) ** below


def test_charpoly_survives_production_scales():
    # eta ~ 1e-30 over 512 levels underflows any naive determinant; the
    # split mantissa/exponent form must stay finite and meaningful
    h = build_hamiltonian(BathSpec(n_e=511, eta=ETA))
    mantissa, exponent = charpoly_eval(h, 0.0)
    assert math.isfinite(mantissa) and mantissa != 0.0
    assert 2.0 ** -520 < abs(mantissa) < 2.0 ** 520
    assert exponent < -40000
    h_odd = build_hamiltonian(BathSpec(n_e=512, eta=ETA))
    mantissa_odd, _ = charpoly_eval(h_odd, 0.0)
    assert mantissa_odd == 0.0


def test_charpoly_matches_direct_determinant_at_small_size():
    h = build_hamiltonian(BathSpec(n_e=3, eta=1.0))
    for x in (-3.7, -0.4, 0.9, 5.1):
        mantissa, exponent = charpoly_eval(h, x)
        direct = float(np.linalg.det(_dense(h) - x * np.eye(h.dim)))
        assert math.isclose(math.ldexp(mantissa, exponent), direct, rel_tol=1e-10)
