import numpy as np
import pytest

from discordctx.errors import ParameterError, ValidationError
from discordctx.linalg import hermitian_eigen
from discordctx.states import (
    SINGLET,
    CounterexampleParams,
    DensityMatrix,
    WernerParams,
    XStateParams,
    counterexample_as_x_params,
    make_classical,
    make_counterexample,
    make_werner,
    make_x_state,
    validate,
)

QUARTER = np.eye(4) / 4


def test_werner_zero_is_maximally_mixed():
    assert np.allclose(np.asarray(make_werner(0.0)), QUARTER, atol=0)


def test_werner_one_is_singlet_projector():
    rho = np.asarray(make_werner(WernerParams(1.0)))
    assert np.allclose(rho, np.outer(SINGLET, SINGLET.conj()), atol=1e-16)
    assert rho[1, 2] == pytest.approx(-0.5)


def test_werner_boundary_spectrum():
    evals = hermitian_eigen(np.asarray(make_werner(-1 / 3))).eigenvalues
    assert np.allclose(evals, [0, 1 / 3, 1 / 3, 1 / 3], atol=1e-15)


@pytest.mark.parametrize("c", np.linspace(-1 / 3, 1, 101))
def test_werner_spectrum_law(c):
    evals = hermitian_eigen(np.asarray(make_werner(c))).eigenvalues
    expected = sorted([(1 - c) / 4] * 3 + [(1 + 3 * c) / 4])
    assert np.max(np.abs(evals - expected)) <= 1e-12


@pytest.mark.parametrize("c", [-0.34, 1.01, 2.0])
def test_werner_out_of_range(c):
    with pytest.raises(ParameterError):
        make_werner(c)


def test_x_state_examples():
    assert np.array_equal(np.asarray(make_x_state(XStateParams(0.25, 0.25, 0.25, 0.25, 0, 0))), QUARTER)
    bell = np.asarray(make_x_state(XStateParams(0.5, 0, 0, 0.5, 0.5, 0)))
    phi_plus = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert np.allclose(bell, np.outer(phi_plus, phi_plus), atol=1e-16)
    assert np.allclose(hermitian_eigen(bell).eigenvalues, [0, 0, 0, 1], atol=1e-15)
    rho = np.asarray(make_x_state(XStateParams(0.3, 0.2, 0.2, 0.3, 0.1, 0.05)))
    assert rho[0, 3] == rho[3, 0] == 0.1
    assert rho[1, 2] == rho[2, 1] == 0.05


def test_x_state_errors_name_block():
    with pytest.raises(ParameterError, match="outer"):
        make_x_state(XStateParams(0.25, 0.25, 0.25, 0.25, 0.3, 0))
    with pytest.raises(ParameterError, match="inner"):
        make_x_state(XStateParams(0.25, 0.25, 0.25, 0.25, 0, 0.3))
    with pytest.raises(ParameterError, match="sums"):
        make_x_state(XStateParams(0.3, 0.3, 0.3, 0.3))
    with pytest.raises(ParameterError):
        make_x_state(XStateParams(0.25, 0.25, 0.25, 0.25, 0.1j, 0))


def test_classical_examples():
    assert np.array_equal(np.asarray(make_classical(0.25, 0.25, 0.25, 0.25)), QUARTER)
    assert np.array_equal(np.asarray(make_classical(1, 0, 0, 0)), np.diag([1, 0, 0, 0]))
    assert np.array_equal(np.asarray(make_classical(0.5, 0, 0, 0.5)), np.diag([0.5, 0, 0, 0.5]))
    with pytest.raises(ParameterError):
        make_classical(1.1, -0.1, 0, 0)
    with pytest.raises(ParameterError):
        make_classical(0.5, 0.5, 0.5, 0)


def test_classical_equals_x_state_without_coherence():
    p = (0.1, 0.2, 0.3, 0.4)
    assert np.array_equal(np.asarray(make_classical(*p)), np.asarray(make_x_state(XStateParams(*p, 0, 0))))


def test_counterexample_examples():
    assert np.array_equal(np.asarray(make_counterexample(CounterexampleParams(0, 0, 0))), QUARTER)
    rho = np.asarray(make_counterexample(CounterexampleParams(0.2, -0.2, 0.1)))
    assert np.allclose(np.diag(rho).real, [0.45, 0.05, 0.45, 0.05])
    assert rho[0, 3] == rho[1, 2] == 0.1
    edge = np.asarray(make_counterexample(CounterexampleParams(0.25, 0, 0)))
    assert np.array_equal(edge, np.diag([0.5, 0.25, 0.25, 0]))


@pytest.mark.parametrize("p", [(0.2, 0, 0.2), (0, 0.25, 0.01), (0.1, 0.1, 0.25)])
def test_counterexample_rejects_outside_region(p):
    with pytest.raises(ParameterError):
        make_counterexample(CounterexampleParams(*p))


def test_counterexample_region_matches_eigen_oracle(rng):
    # analytic block bounds agree with the eigensolver on random parameters
    for _ in range(500):
        alpha, beta, z = rng.uniform(-0.3, 0.3, size=3)
        inside = alpha**2 + z**2 <= 1 / 16 and beta**2 + z**2 <= 1 / 16
        raw = np.diag([0.25 + alpha, 0.25 + beta, 0.25 - beta, 0.25 - alpha]).astype(complex)
        raw[0, 3] = raw[3, 0] = raw[1, 2] = raw[2, 1] = z
        assert (hermitian_eigen(raw).eigenvalues[0] >= -1e-12) == inside


def test_counterexample_is_x_state_bitwise(rng):
    for _ in range(50):
        alpha, beta = rng.uniform(-0.2, 0.2, size=2)
        z = rng.uniform(0, np.sqrt(1 / 16 - max(alpha**2, beta**2)))
        p = CounterexampleParams(alpha, beta, z)
        assert np.array_equal(np.asarray(make_counterexample(p)), np.asarray(make_x_state(counterexample_as_x_params(p))))


def test_validate_examples():
    assert isinstance(validate(QUARTER), DensityMatrix)
    with pytest.raises(ValidationError, match="positive semidefinite"):
        validate(np.diag([0.5, 0.6, -0.05, -0.05]))
    with pytest.raises(ValidationError, match="trace"):
        validate(np.eye(4) / 8)
    bad = QUARTER.astype(complex)
    bad[0, 1] = 0.1j
    with pytest.raises(ValidationError, match="Hermitian"):
        validate(bad)
    with pytest.raises(ValidationError):
        validate(np.eye(2) / 2)


def test_density_matrix_is_read_only():
    rho = make_werner(0.3)
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1


def test_half_normalised_singlet_breaks_trace(monkeypatch):
    import discordctx.states as states

    monkeypatch.setattr(states, "SINGLET", (states.KET_01 - states.KET_10) / 2)
    with pytest.raises(ValidationError, match="trace"):
        states.make_werner(1.0)
