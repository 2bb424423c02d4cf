"""Dense complex kernel for 2x2 and 4x4 matrices.

Basis ordering is |00>, |01>, |10>, |11> with the first index on qubit A.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ValidationError

SUPPORTED_DIMS = (2, 4)
HERMITIAN_TOL = 1e-10
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 50

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (I2, SIGMA_X, SIGMA_Y, SIGMA_Z)


def as_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a complex square array of dimension 2 or 4."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
    if arr.shape[0] not in SUPPORTED_DIMS:
        raise DimensionError(f"dimension {arr.shape[0]} not in {SUPPORTED_DIMS}")
    return arr


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product ``a (x) b``; the result may not exceed dimension 4."""
    a = as_matrix(a)
    b = as_matrix(b)
    m, n = a.shape[0], b.shape[0]
    if m * n > 4:
        raise DimensionError(f"tensor product dimension {m * n} exceeds 4")
    out = np.zeros((m * n, m * n), dtype=complex)
    for i in range(m):
        for j in range(m):
            out[i * n:(i + 1) * n, j * n:(j + 1) * n] = a[i, j] * b
    return out


def partial_trace(m, subsystem: str) -> np.ndarray:
    """Reduced 2x2 matrix after tracing out ``subsystem`` ("A" or "B")."""
    m = as_matrix(m)
    if m.shape[0] != 4:
        raise DimensionError("partial trace needs a 4x4 matrix")
    blocks = m.reshape(2, 2, 2, 2)  # [i_A, i_B, j_A, j_B]
    if subsystem == "B":
        return np.einsum("ikjk->ij", blocks)
    if subsystem == "A":
        return np.einsum("kikj->ij", blocks)
    raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def partial_transpose(m, subsystem: str = "B") -> np.ndarray:
    m = as_matrix(m)
    if m.shape[0] != 4:
        raise DimensionError("partial transpose needs a 4x4 matrix")
    blocks = m.reshape(2, 2, 2, 2)
    if subsystem == "B":
        return blocks.transpose(0, 3, 2, 1).reshape(4, 4)
    if subsystem == "A":
        return blocks.transpose(2, 1, 0, 3).reshape(4, 4)
    raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def max_abs(m) -> float:
    return float(np.max(np.abs(m))) if np.size(m) else 0.0


@dataclass(frozen=True)
class HermitianEigenDecomposition:
    """Ascending real eigenvalues and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ dagger(v)


def _off_diagonal_max(a: np.ndarray) -> float:
    n = a.shape[0]
    return max((abs(a[p, q]) for p in range(n) for q in range(p + 1, n)), default=0.0)


def hermitian_eigen(m) -> HermitianEigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies a real Givens rotation that annihilates it. Sweeps stop once the
    largest off-diagonal magnitude falls below ``1e-14`` (scaled by the matrix
    norm when that exceeds one) or after 50 sweeps.

    Raises
    ------
    ValidationError
        If ``m`` deviates from its conjugate transpose by more than 1e-10.
    """
    a = as_matrix(m).copy()
    skew = max_abs(a - dagger(a))
    if skew > HERMITIAN_TOL:
        raise ValidationError(f"matrix is not Hermitian (max |M - M^dag| = {skew:.3e})")
    a = 0.5 * (a + dagger(a))
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    tol = JACOBI_TOL * max(1.0, float(np.linalg.norm(a)))

    for _ in range(JACOBI_MAX_SWEEPS):
        if _off_diagonal_max(a) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                h = a[p, q]
                mag = abs(h)
                if mag < tol * 1e-3:
                    continue
                phase = h / mag
                app, aqq = a[p, p].real, a[q, q].real
                theta = (aqq - app) / (2.0 * mag)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # U = diag-phase on q followed by the real rotation [[c, s], [-s, c]]
                u = np.eye(n, dtype=complex)
                u[p, p] = c
                u[p, q] = s
                u[q, p] = -s * np.conj(phase)
                u[q, q] = c * np.conj(phase)
                a = dagger(u) @ a @ u
                a[p, q] = a[q, p] = 0.0
                v = v @ u

    evals = np.real(np.diag(a)).copy()
    order = np.argsort(evals, kind="stable")
    return HermitianEigenDecomposition(evals[order], v[:, order])


def eigenvalues(m) -> np.ndarray:
    return hermitian_eigen(m).eigenvalues
