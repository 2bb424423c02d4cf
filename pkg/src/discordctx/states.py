"""Two-qubit density matrices and the state families used throughout the package."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, ValidationError
from .linalg import as_matrix, dagger, hermitian_eigen, max_abs

STATE_TOL = 1e-10
# slack on family parameter inequalities so that grid points on a boundary survive rounding
PARAM_TOL = 1e-12

KET_01 = np.array([0, 1, 0, 0], dtype=complex)
KET_10 = np.array([0, 0, 1, 0], dtype=complex)
SINGLET = (KET_01 - KET_10) / math.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated 4x4 Hermitian, unit-trace, positive semidefinite matrix.

    Build instances through :func:`validate` or one of the family constructors;
    the wrapped array is marked read-only.
    """

    matrix: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)


def _check_state(m: np.ndarray) -> None:
    skew = max_abs(m - dagger(m))
    if skew > STATE_TOL:
        raise ValidationError(f"not Hermitian: max |rho - rho^dag| = {skew:.3e}")
    trace = complex(np.trace(m))
    if abs(trace - 1.0) > STATE_TOL:
        raise ValidationError(f"trace {trace.real:.12g} deviates from 1 by {abs(trace - 1.0):.3e}")
    lowest = hermitian_eigen(m).eigenvalues[0]
    if lowest < -STATE_TOL:
        raise ValidationError(f"not positive semidefinite: minimum eigenvalue {lowest:.3e}")


def validate(rho) -> DensityMatrix:
    """Check a raw 4x4 matrix and wrap it as a :class:`DensityMatrix`."""
    if isinstance(rho, DensityMatrix):
        return rho
    m = as_matrix(rho).copy()
    if m.shape[0] != 4:
        raise ValidationError(f"two-qubit state must be 4x4, got {m.shape}")
    _check_state(m)
    m.setflags(write=False)
    return DensityMatrix(m)


def validate_qubit(rho) -> np.ndarray:
    """Same checks as :func:`validate` for a single-qubit 2x2 matrix."""
    m = as_matrix(rho)
    if m.shape[0] != 2:
        raise ValidationError(f"qubit state must be 2x2, got {m.shape}")
    _check_state(m)
    return m


@dataclass(frozen=True)
class WernerParams:
    c: float


@dataclass(frozen=True)
class XStateParams:
    a: float
    b: float
    c: float
    d: float
    w: float = 0.0
    z: float = 0.0


@dataclass(frozen=True)
class CounterexampleParams:
    alpha: float
    beta: float
    z: float


def _real(name: str, value) -> float:
    if isinstance(value, complex):
        if value.imag != 0.0:
            raise ParameterError(f"{name} must be real, got {value}")
        value = value.real
    try:
        return float(value)
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"{name} must be a real number, got {value!r}") from exc


def make_werner(p: WernerParams | float) -> DensityMatrix:
    """Mixture ``(1-c)/4 I + c |Psi-><Psi-|`` of white noise and the singlet."""
    c = _real("c", p.c if isinstance(p, WernerParams) else p)
    if not (-1.0 / 3.0 - PARAM_TOL <= c <= 1.0 + PARAM_TOL):
        raise ParameterError(f"Werner parameter c = {c} outside [-1/3, 1]")
    rho = (1.0 - c) / 4.0 * np.eye(4, dtype=complex) + c * np.outer(SINGLET, SINGLET.conj())
    return validate(rho)


def _x_matrix(a, b, c, d, w, z) -> np.ndarray:
    m = np.diag(np.array([a, b, c, d], dtype=complex))
    m[0, 3] = m[3, 0] = w
    m[1, 2] = m[2, 1] = z
    return m


def check_x_params(p: XStateParams) -> None:
    """Raise :class:`ParameterError` unless ``p`` describes a valid real X-state."""
    a, b, c, d = (_real(k, getattr(p, k)) for k in "abcd")
    w, z = _real("w", p.w), _real("z", p.z)
    for name, v in zip("abcd", (a, b, c, d)):
        if v < -PARAM_TOL:
            raise ParameterError(f"diagonal entry {name} = {v} is negative")
    total = a + b + c + d
    if abs(total - 1.0) > PARAM_TOL:
        raise ParameterError(f"diagonal sums to {total!r}, not 1")
    if a * d - w * w < -PARAM_TOL:
        raise ParameterError(f"outer block (a, d, w) not PSD: a*d = {a * d:.6g} < w^2 = {w * w:.6g}")
    if b * c - z * z < -PARAM_TOL:
        raise ParameterError(f"inner block (b, c, z) not PSD: b*c = {b * c:.6g} < z^2 = {z * z:.6g}")


def make_x_state(p: XStateParams) -> DensityMatrix:
    """Real X-state with diagonal (a, b, c, d), corner coherence w and inner coherence z."""
    check_x_params(p)
    return validate(_x_matrix(float(p.a), float(p.b), float(p.c), float(p.d),
                              _real("w", p.w), _real("z", p.z)))


def make_classical(a: float, b: float, c: float, d: float) -> DensityMatrix:
    """Diagonal state ``diag(a, b, c, d)`` in the computational basis."""
    return make_x_state(XStateParams(a, b, c, d, 0.0, 0.0))


def check_counterexample_params(p: CounterexampleParams) -> None:
    alpha, beta, z = _real("alpha", p.alpha), _real("beta", p.beta), _real("z", p.z)
    if alpha * alpha + z * z > 1.0 / 16.0 + PARAM_TOL:
        raise ParameterError(f"alpha^2 + z^2 = {alpha * alpha + z * z:.6g} exceeds 1/16")
    if beta * beta + z * z > 1.0 / 16.0 + PARAM_TOL:
        raise ParameterError(f"beta^2 + z^2 = {beta * beta + z * z:.6g} exceeds 1/16")


def counterexample_as_x_params(p: CounterexampleParams) -> XStateParams:
    return XStateParams(0.25 + p.alpha, 0.25 + p.beta, 0.25 - p.beta, 0.25 - p.alpha, p.z, p.z)


def make_counterexample(p: CounterexampleParams) -> DensityMatrix:
    """X-state ``diag(1/4+alpha, 1/4+beta, 1/4-beta, 1/4-alpha)`` with every coherence ``z``."""
    check_counterexample_params(p)
    return make_x_state(counterexample_as_x_params(p))
