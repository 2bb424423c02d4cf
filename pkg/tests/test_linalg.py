import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from discordctx.errors import DimensionError, ValidationError
from discordctx.linalg import (
    I2,
    SIGMA_X,
    SIGMA_Z,
    hermitian_eigen,
    partial_trace,
    tensor_product,
)
from discordctx.states import SINGLET, make_werner

from conftest import random_density, random_hermitian

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_identity_kron():
    assert np.array_equal(tensor_product(I2, I2), np.eye(4))


def test_sigma_x_kron_is_antidiagonal():
    assert np.array_equal(tensor_product(SIGMA_X, SIGMA_X), np.fliplr(np.eye(4)))


def test_sigma_z_kron_identity():
    assert np.array_equal(tensor_product(SIGMA_Z, I2), np.diag([1, 1, -1, -1]))


def test_tensor_matches_entry_rule(rng):
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    out = tensor_product(a, b)
    for i, j, k, l in np.ndindex(2, 2, 2, 2):
        assert abs(out[i * 2 + k, j * 2 + l] - a[i, j] * b[k, l]) <= 1e-15


def test_tensor_dimension_limit():
    with pytest.raises(DimensionError):
        tensor_product(np.eye(4), I2)
    with pytest.raises(DimensionError):
        tensor_product(np.eye(3), np.eye(1))


@settings(max_examples=50, deadline=None)
@given(seeds, st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False))
def test_tensor_bilinear_and_trace(seed, alpha):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    assert np.max(np.abs(tensor_product(alpha * a, b) - alpha * tensor_product(a, b))) <= 1e-12 * max(1, abs(alpha))
    assert abs(np.trace(tensor_product(a, b)) - np.trace(a) * np.trace(b)) <= 1e-12 * 10
    assert np.max(np.abs(partial_trace(tensor_product(a, b), "B") - a * np.trace(b))) <= 1e-12 * 10


def test_partial_trace_product_state(rng):
    ra = random_hermitian(rng, 2) @ random_hermitian(rng, 2)
    ra = ra @ ra.conj().T
    ra /= np.trace(ra)
    rb = np.diag([0.3, 0.7])
    assert np.allclose(partial_trace(tensor_product(ra, rb), "B"), ra, atol=1e-14)
    assert np.allclose(partial_trace(tensor_product(ra, rb), "A"), rb, atol=1e-14)


def test_partial_trace_singlet_marginal():
    proj = np.outer(SINGLET, SINGLET.conj())
    assert np.allclose(partial_trace(proj, "B"), I2 / 2, atol=1e-15)


@pytest.mark.parametrize("c", np.linspace(-1 / 3, 1, 11))
def test_partial_trace_werner_marginals(c):
    rho = np.asarray(make_werner(c))
    assert np.allclose(partial_trace(rho, "A"), I2 / 2, atol=1e-15)
    assert np.allclose(partial_trace(rho, "B"), I2 / 2, atol=1e-15)


def test_partial_trace_preserves_trace(rng):
    m = random_hermitian(rng)
    for side in "AB":
        assert abs(np.trace(partial_trace(m, side)) - np.trace(m)) < 1e-12


def test_partial_trace_rejects_qubit():
    with pytest.raises(DimensionError):
        partial_trace(I2, "A")


@pytest.mark.parametrize(
    "m, expected",
    [
        (np.diag([0.4, 0.1, 0.3, 0.2]), [0.1, 0.2, 0.3, 0.4]),
        (SIGMA_X, [-1.0, 1.0]),
        (np.outer(SINGLET, SINGLET.conj()), [0.0, 0.0, 0.0, 1.0]),
    ],
)
def test_eigen_examples(m, expected):
    assert np.allclose(hermitian_eigen(m).eigenvalues, expected, atol=1e-14)


def test_eigen_rejects_non_hermitian():
    with pytest.raises(ValidationError):
        hermitian_eigen(np.array([[0, 1], [0, 0]]))


def test_eigen_deterministic(rng):
    m = random_hermitian(rng)
    d1, d2 = hermitian_eigen(m), hermitian_eigen(m.copy())
    assert np.array_equal(d1.eigenvalues, d2.eigenvalues)
    assert np.array_equal(d1.eigenvectors, d2.eigenvectors)


def test_eigen_reconstruction_1000(rng):
    for _ in range(1000):
        m = random_hermitian(rng)
        dec = hermitian_eigen(m)
        v = dec.eigenvectors
        assert np.max(np.abs(dec.reconstruct() - m)) <= 1e-12
        assert np.max(np.abs(v.conj().T @ v - np.eye(4))) <= 1e-12
        assert np.all(np.diff(dec.eigenvalues) >= 0)


def test_eigen_agrees_with_lapack(rng):
    for _ in range(50):
        m = random_hermitian(rng)
        assert np.allclose(hermitian_eigen(m).eigenvalues, np.linalg.eigvalsh(m), atol=1e-12)


def test_density_eigenvalues_sum_to_one(rng):
    for _ in range(100):
        assert abs(hermitian_eigen(random_density(rng)).eigenvalues.sum() - 1) <= 1e-12
