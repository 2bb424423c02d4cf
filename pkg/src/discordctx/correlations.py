"""Entropies, local measurements on qubit B, classical correlation, discord and concurrence.

All information quantities are in bits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError, ValidationError
from .linalg import (
    I2,
    PAULIS,
    SIGMA_Y,
    hermitian_eigen,
    partial_trace,
    partial_transpose,
    tensor_product,
)
from .states import STATE_TOL, DensityMatrix, validate

DEFAULT_GRID = (64, 128)
N_STARTS = 5
SIMPLEX_TOL = 1e-10
MAX_REFINE_ITER = 500
ZERO_PROB = 1e-14
DISCORD_FLOOR = -1e-7


@dataclass(frozen=True)
class MeasurementSetting:
    """Projective measurement on B along the Bloch direction (theta, phi)."""

    theta: float
    phi: float

    @property
    def direction(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "MeasurementSetting":
        """Fold arbitrary angles into theta in [0, pi], phi in [0, 2 pi)."""
        st, ct = math.sin(theta), math.cos(theta)
        x, y, z = st * math.cos(phi), st * math.sin(phi), ct
        t = math.acos(max(-1.0, min(1.0, z)))
        p = math.atan2(y, x) % (2.0 * math.pi) if math.hypot(x, y) > 1e-15 else 0.0
        if p >= 2.0 * math.pi:
            p = 0.0
        return cls(t, p)


@dataclass(frozen=True)
class ConditionedOutcome:
    probability: float
    conditional_state_A: np.ndarray


@dataclass(frozen=True)
class CorrelationReport:
    entropy_A: float
    entropy_B: float
    entropy_total: float
    mutual_information: float
    classical_correlation: float
    discord: float
    concurrence: float
    optimal_setting: MeasurementSetting


def _entropy_from_eigenvalues(evals) -> float:
    total = 0.0
    for lam in evals:
        if lam < -STATE_TOL:
            raise ValidationError(f"negative eigenvalue {lam:.3e} in entropy argument")
        if lam > 0.0:
            total -= lam * math.log2(lam)
    return float(total) + 0.0  # normalise -0.0


def von_neumann_entropy(rho) -> float:
    """``-Tr(rho log2 rho)`` with ``0 log 0 = 0``; accepts 2x2 or 4x4 states."""
    return _entropy_from_eigenvalues(hermitian_eigen(np.asarray(rho)).eigenvalues)


def reduced_states(rho: DensityMatrix) -> tuple[np.ndarray, np.ndarray]:
    m = np.asarray(rho)
    return partial_trace(m, "B"), partial_trace(m, "A")


def mutual_information(rho) -> float:
    rho = validate(rho)
    rho_a, rho_b = reduced_states(rho)
    return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) - von_neumann_entropy(rho)


def swap_subsystems(rho) -> DensityMatrix:
    """Exchange qubits A and B, so B-side routines act on the original A."""
    m = np.asarray(validate(rho)).reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
    return validate(m)


def measure_B(rho, setting: MeasurementSetting) -> tuple[ConditionedOutcome, ConditionedOutcome]:
    """Project qubit B onto ``(I +/- n.sigma)/2`` and return both outcomes of A.

    An outcome whose probability is below 1e-14 is reported with the maximally
    mixed conditional state.
    """
    m = np.asarray(validate(rho))
    n = setting.direction
    n_sigma = n[0] * PAULIS[1] + n[1] * PAULIS[2] + n[2] * PAULIS[3]
    outcomes = []
    for sign in (1.0, -1.0):
        proj = tensor_product(I2, 0.5 * (I2 + sign * n_sigma))
        post = proj @ m @ proj
        p = float(np.real(np.trace(post)))
        if p < ZERO_PROB:
            outcomes.append(ConditionedOutcome(max(p, 0.0), I2 / 2.0))
        else:
            outcomes.append(ConditionedOutcome(p, partial_trace(post, "B") / p))
    return outcomes[0], outcomes[1]


def pauli_components(rho) -> np.ndarray:
    """Real 4x4 array ``R[i, j] = Tr(rho sigma_i (x) sigma_j)`` with sigma_0 = I."""
    m = np.asarray(rho)
    r = np.empty((4, 4))
    for i, si in enumerate(PAULIS):
        for j, sj in enumerate(PAULIS):
            r[i, j] = np.real(np.trace(m @ tensor_product(si, sj)))
    return r


def _binary_entropy_of_norm(r):
    """Entropy of a qubit whose Bloch vector has length ``r`` (array-friendly)."""
    r = np.clip(r, 0.0, 1.0)
    hi = (1.0 + r) / 2.0
    lo = (1.0 - r) / 2.0
    with np.errstate(divide="ignore", invalid="ignore"):
        h = -np.where(hi > 0, hi * np.log2(hi), 0.0) - np.where(lo > 0, lo * np.log2(lo), 0.0)
    return h


class _ConditionalEntropy:
    """Average entropy of A after a projective measurement of B, as a function of angles.

    Works from the Pauli components: outcome probabilities are ``(1 +/- b.n)/2``
    and the conditional Bloch vectors of A are ``(a +/- T n)/(1 +/- b.n)``.
    """

    def __init__(self, rho):
        r = pauli_components(rho)
        self.a = r[1:, 0].copy()
        self.b = r[0, 1:].copy()
        self.t = r[1:, 1:].copy()
        # plain floats for the scalar path used by the simplex search
        self._a = self.a.tolist()
        self._b = self.b.tolist()
        self._t = self.t.tolist()

    def grid(self, thetas: np.ndarray, phis: np.ndarray) -> np.ndarray:
        th, ph = np.meshgrid(thetas, phis, indexing="ij")
        n = np.stack([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)], axis=-1)
        bn = n @ self.b
        tn = n @ self.t.T
        total = np.zeros(th.shape)
        for sign in (1.0, -1.0):
            q = 1.0 + sign * bn  # twice the probability
            vec = self.a + sign * tn
            with np.errstate(divide="ignore", invalid="ignore"):
                norm = np.linalg.norm(vec, axis=-1) / q
            keep = q / 2.0 >= ZERO_PROB
            total += np.where(keep, (q / 2.0) * _binary_entropy_of_norm(np.where(keep, norm, 0.0)), 0.0)
        return total

    def __call__(self, theta: float, phi: float) -> float:
        st = math.sin(theta)
        n0, n1, n2 = st * math.cos(phi), st * math.sin(phi), math.cos(theta)
        a, b, t = self._a, self._b, self._t
        bn = b[0] * n0 + b[1] * n1 + b[2] * n2
        tn = [row[0] * n0 + row[1] * n1 + row[2] * n2 for row in t]
        total = 0.0
        for sign in (1.0, -1.0):
            q = 1.0 + sign * bn
            if q / 2.0 < ZERO_PROB:
                continue
            r = math.sqrt(sum((a[k] + sign * tn[k]) ** 2 for k in range(3))) / q
            r = min(r, 1.0)
            hi, lo = (1.0 + r) / 2.0, (1.0 - r) / 2.0
            h = 0.0
            if hi > 0.0:
                h -= hi * math.log2(hi)
            if lo > 0.0:
                h -= lo * math.log2(lo)
            total += (q / 2.0) * h
        return total


def _diameter(simplex) -> float:
    return max(math.dist(p, q) for i, p in enumerate(simplex) for q in simplex[i + 1:])


def _affine(origin, toward, scale):
    """Point ``origin + scale * (toward - origin)``."""
    return (origin[0] + scale * (toward[0] - origin[0]), origin[1] + scale * (toward[1] - origin[1]))


def nelder_mead(f, x0, step, tol: float = SIMPLEX_TOL, max_iter: int = MAX_REFINE_ITER):
    """Minimise ``f(x, y)`` with a deterministic Nelder-Mead simplex.

    Coefficients: reflection 1, expansion 2, contraction 0.5, shrink 0.5.
    Stops when the simplex diameter drops below ``tol``.

    Returns
    -------
    (x, fx, iterations)

    Raises
    ------
    NumericalError
        If the diameter criterion is not met within ``max_iter`` iterations.
    """
    x0 = (float(x0[0]), float(x0[1]))
    simplex = [x0, (x0[0] + step, x0[1]), (x0[0], x0[1] + step)]
    values = [f(*p) for p in simplex]
    for it in range(max_iter):
        order = sorted(range(3), key=values.__getitem__)
        simplex = [simplex[k] for k in order]
        values = [values[k] for k in order]
        if _diameter(simplex) < tol:
            return simplex[0], values[0], it
        centroid = _affine(simplex[0], simplex[1], 0.5)
        worst = simplex[2]
        xr = _affine(centroid, worst, -1.0)
        fr = f(*xr)
        if fr < values[0]:
            xe = _affine(centroid, worst, -2.0)
            fe = f(*xe)
            simplex[2], values[2] = (xe, fe) if fe < fr else (xr, fr)
            continue
        if fr < values[1]:
            simplex[2], values[2] = xr, fr
            continue
        if fr < values[2]:
            xc = _affine(centroid, xr, 0.5)
            fc = f(*xc)
            if fc <= fr:
                simplex[2], values[2] = xc, fc
                continue
        else:
            xc = _affine(centroid, worst, 0.5)
            fc = f(*xc)
            if fc < values[2]:
                simplex[2], values[2] = xc, fc
                continue
        best = simplex[0]
        simplex = [best] + [_affine(best, p, 0.5) for p in simplex[1:]]
        values = [values[0]] + [f(*p) for p in simplex[1:]]
    raise NumericalError(f"Nelder-Mead did not reach diameter {tol:g} in {max_iter} iterations")


def _minimise_conditional_entropy(rho, grid=DEFAULT_GRID, refine: bool = True):
    n_theta, n_phi = grid
    if n_theta < 1 or n_phi < 1:
        raise ValueError(f"grid must be positive, got {grid}")
    objective = _ConditionalEntropy(rho)
    thetas = np.arange(n_theta) * (math.pi / n_theta)
    phis = np.arange(n_phi) * (2.0 * math.pi / n_phi)
    values = objective.grid(thetas, phis)
    flat = values.ravel()
    order = np.argsort(flat, kind="stable")
    best_idx = int(order[0])
    best_x = (float(thetas[best_idx // n_phi]), float(phis[best_idx % n_phi]))
    best_f = float(flat[best_idx])
    if refine:
        step = min(math.pi / n_theta, 2.0 * math.pi / n_phi)
        for idx in order[:N_STARTS]:
            start = (thetas[idx // n_phi], phis[idx % n_phi])
            x, fx, _ = nelder_mead(objective, start, step)
            if fx < best_f:
                best_f, best_x = float(fx), (float(x[0]), float(x[1]))
    return best_f, MeasurementSetting.from_angles(*best_x)


def classical_correlation(rho, grid=DEFAULT_GRID, refine: bool = True) -> tuple[float, MeasurementSetting]:
    """Largest information about A obtainable from a projective measurement on B.

    Evaluates ``S(rho_A) - sum_k p_k S(rho_A|k)`` on a uniform (theta, phi) grid,
    then polishes the five best grid points with Nelder-Mead. Pass
    ``refine=False`` for the grid-only value.
    """
    rho = validate(rho)
    s_a = von_neumann_entropy(partial_trace(np.asarray(rho), "B"))
    cond, setting = _minimise_conditional_entropy(rho, grid, refine)
    return max(s_a - cond, 0.0), setting


def _ytilde(m: np.ndarray) -> np.ndarray:
    yy = tensor_product(SIGMA_Y, SIGMA_Y)
    return yy @ np.conj(m) @ yy


def _psd_sqrt(m: np.ndarray) -> np.ndarray:
    dec = hermitian_eigen(m)
    roots = np.sqrt(np.clip(dec.eigenvalues, 0.0, None))
    v = dec.eigenvectors
    return (v * roots) @ np.conj(v).T


def concurrence(rho) -> float:
    """Wootters concurrence ``max(0, l1 - l2 - l3 - l4)``.

    The ``l_i`` are square roots of the eigenvalues of ``rho (Y(x)Y) rho* (Y(x)Y)``,
    obtained from the Hermitian form ``sqrt(rho) rho~ sqrt(rho)`` which shares
    its spectrum.
    """
    m = np.asarray(validate(rho))
    root = _psd_sqrt(m)
    herm = root @ _ytilde(m) @ root
    herm = 0.5 * (herm + np.conj(herm).T)
    lam = np.sqrt(np.clip(hermitian_eigen(herm).eigenvalues, 0.0, None))[::-1]
    return float(min(1.0, max(0.0, lam[0] - lam[1] - lam[2] - lam[3])))


def min_partial_transpose_eigenvalue(rho) -> float:
    return float(hermitian_eigen(partial_transpose(np.asarray(validate(rho)), "B")).eigenvalues[0])


def quantum_discord(rho, grid=DEFAULT_GRID, refine: bool = True) -> CorrelationReport:
    """Full correlation report, with discord measured on qubit B.

    For the A-side variant call this on ``swap_subsystems(rho)``.

    Raises
    ------
    NumericalError
        If the unclamped discord falls below -1e-7, or the refinement fails to converge.
    """
    rho = validate(rho)
    rho_a, rho_b = reduced_states(rho)
    s_a = von_neumann_entropy(rho_a)
    s_b = von_neumann_entropy(rho_b)
    s_ab = von_neumann_entropy(rho)
    mi = s_a + s_b - s_ab
    cond, setting = _minimise_conditional_entropy(rho, grid, refine)
    cc = max(s_a - cond, 0.0)
    raw = mi - cc
    if raw < DISCORD_FLOOR:
        raise NumericalError(f"discord {raw:.3e} below tolerance {DISCORD_FLOOR:g}")
    return CorrelationReport(
        entropy_A=s_a,
        entropy_B=s_b,
        entropy_total=s_ab,
        mutual_information=mi,
        classical_correlation=cc,
        discord=max(raw, 0.0),
        concurrence=concurrence(rho),
        optimal_setting=setting,
    )


def discord(rho, grid=DEFAULT_GRID, refine: bool = True) -> float:
    return quantum_discord(rho, grid, refine).discord
