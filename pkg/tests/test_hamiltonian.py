import numpy as np
import pytest

from unruhsim import (
    BathSpec,
    ConfigError,
    DomainError,
    build_dense_complex,
    build_hamiltonian,
    eigendecompose,
    gauge_phases,
    number_operator,
)

ETA = 1.7251395686857924e-30


def test_bath_spec_dimension_counts_both_vacua():
    assert BathSpec(n_e=1, eta=1.0).dim == 2
    assert BathSpec(n_e=200, eta=ETA).dim == 201


def test_bath_spec_guards():
    for bad_ne in (0, -3, 1.5, True):
        with pytest.raises(DomainError):
            BathSpec(n_e=bad_ne, eta=1.0)
    for bad_eta in (0.0, -1e-30, float("nan")):
        with pytest.raises(DomainError):
            BathSpec(n_e=2, eta=bad_eta)


def test_offdiagonal_is_the_index_ladder():
    h = build_hamiltonian(BathSpec(n_e=1, eta=1.0))
    assert np.array_equal(h.offdiag, np.array([1.0]))
    h = build_hamiltonian(BathSpec(n_e=2, eta=1.0))
    assert np.array_equal(h.offdiag, np.array([1.0, 2.0]))
    h = build_hamiltonian(BathSpec(n_e=5, eta=ETA))
    assert np.array_equal(h.offdiag, np.arange(1.0, 6.0) * ETA)
    assert h.eta == ETA
    assert h.dim == 6


def test_hamiltonian_array_is_read_only():
    h = build_hamiltonian(BathSpec(n_e=3, eta=1.0))
    with pytest.raises(ValueError):
        h.offdiag[0] = 99.0


def test_two_level_spectrum_is_plus_minus_eta():
    h = build_hamiltonian(BathSpec(n_e=1, eta=1.0))
    values = eigendecompose(h).values
    assert np.allclose(values, [-1.0, 1.0], atol=1e-14, rtol=0.0)


def test_three_level_spectrum_is_root_five():
    h = build_hamiltonian(BathSpec(n_e=2, eta=1.0))
    values = eigendecompose(h).values
    assert np.allclose(values, [-np.sqrt(5.0), 0.0, np.sqrt(5.0)], atol=1e-12, rtol=0.0)


def test_trace_identities():
    # tr H = 0 and tr H^2 = 2 eta^2 sum n^2 over the ladder
    for n_e in (1, 2, 3, 8, 16):
        h = build_hamiltonian(BathSpec(n_e=n_e, eta=ETA))
        values = eigendecompose(h).values
        scale = float(np.max(np.abs(values)))
        assert abs(float(values.sum())) <= 1e-12 * scale
        expected_sq = 2.0 * ETA ** 2 * sum(n * n for n in range(1, n_e + 1))
        assert np.isclose(float((values ** 2).sum()), expected_sq, rtol=1e-12)


def test_dense_complex_matches_hand_built_two_level():
    h = build_dense_complex(BathSpec(n_e=1, eta=ETA))
    expected = np.array([[0.0, -1j * ETA], [1j * ETA, 0.0]])
    assert np.array_equal(h, expected)


def test_dense_complex_is_hermitian_with_zero_diagonal():
    for n_e in (2, 5, 8):
        h = build_dense_complex(BathSpec(n_e=n_e, eta=ETA))
        assert np.array_equal(h, h.conj().T)
        assert np.all(h.diagonal() == 0.0)
        assert np.all(h.real == 0.0)


def test_dense_complex_size_guard():
    with pytest.raises(DomainError):
        build_dense_complex(BathSpec(n_e=65, eta=1.0))


def test_gauge_rotation_renders_the_matrix_real():
    # conjugating by diag(i^n) must produce exactly the real ladder matrix
    for n_e in (1, 2, 7):
        spec = BathSpec(n_e=n_e, eta=ETA)
        hc = build_dense_complex(spec)
        d = gauge_phases(spec.dim)
        rotated = (d.conj()[:, None] * hc) * d[None, :]
        off = build_hamiltonian(spec).offdiag
        real = np.diag(off, 1) + np.diag(off, -1)
        assert np.array_equal(rotated.real, real)
        assert np.all(rotated.imag == 0.0)


def test_gauge_phases_cycle():
    d = gauge_phases(8)
    assert np.array_equal(d[:4], np.array([1.0, 1j, -1.0, -1j]))
    assert np.array_equal(d[:4], d[4:])
    assert np.all(np.abs(d) == 1.0)


def test_number_operator_conventions():
    spec = BathSpec(n_e=2, eta=1.0)
    pairs = number_operator(spec, convention="pairs")
    quanta = number_operator(spec, convention="quanta")
    assert np.array_equal(pairs.entries, np.array([0.0, 1.0, 2.0]))
    assert np.array_equal(quanta.entries, np.array([0.0, 2.0, 4.0]))
    assert pairs.convention == "pairs"
    with pytest.raises(ConfigError):
        number_operator(spec, convention="modes")


def test_number_operator_expectation_stays_in_range():
    spec = BathSpec(n_e=6, eta=1.0)
    nop = number_operator(spec)
    rng = np.random.default_rng(3)
    for _ in range(25):
        psi = rng.normal(size=spec.dim)
        psi /= np.linalg.norm(psi)
        value = float((psi ** 2) @ nop.entries)
        assert 0.0 <= value <= nop.entries[-1]
