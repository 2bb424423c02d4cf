"""Pauli-pair expectations and the product-of-averages consistency test.

A non-contextual assignment of +/-1 outcomes to the local X and Y measurements
forces ``<XX><YY> = <XY><YX>``. The gap between the two sides is computed for a
given state and compared against a tolerance. The verdict only concerns these
two commuting sets; it is not a general contextuality certificate.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NumericalError, ParameterError
from .linalg import I2, SIGMA_X, SIGMA_Y, SIGMA_Z, tensor_product
from .states import validate

DEFAULT_EPSILON = 1e-9
IMAG_TOL = 1e-12


class Pauli(Enum):
    I = "I"
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def matrix(self) -> np.ndarray:
        return {"I": I2, "X": SIGMA_X, "Y": SIGMA_Y, "Z": SIGMA_Z}[self.value]


@dataclass(frozen=True)
class PauliPair:
    first: Pauli
    second: Pauli

    @classmethod
    def parse(cls, label: str) -> "PauliPair":
        if len(label) != 2:
            raise ParameterError(f"Pauli pair label must have two letters, got {label!r}")
        try:
            return cls(Pauli(label[0].upper()), Pauli(label[1].upper()))
        except ValueError as exc:
            raise ParameterError(f"unknown Pauli label in {label!r}") from exc

    @property
    def matrix(self) -> np.ndarray:
        return tensor_product(self.first.matrix, self.second.matrix)


XX = PauliPair(Pauli.X, Pauli.X)
YY = PauliPair(Pauli.Y, Pauli.Y)
XY = PauliPair(Pauli.X, Pauli.Y)
YX = PauliPair(Pauli.Y, Pauli.X)


@dataclass(frozen=True)
class NoncontextualAssignment:
    x_a: int
    x_b: int
    y_a: int
    y_b: int

    def __post_init__(self):
        for name in ("x_a", "x_b", "y_a", "y_b"):
            if getattr(self, name) not in (-1, 1):
                raise ParameterError(f"{name} must be +1 or -1, got {getattr(self, name)!r}")


@dataclass(frozen=True)
class ContextualityVerdict:
    exp_xx: float
    exp_yy: float
    exp_xy: float
    exp_yx: float
    gap: float
    consistent: bool
    epsilon: float


def expectation(rho, obs: PauliPair | str) -> float:
    """``Tr(rho O)`` for a two-qubit Pauli product ``O``."""
    if isinstance(obs, str):
        obs = PauliPair.parse(obs)
    value = complex(np.trace(np.asarray(validate(rho)) @ obs.matrix))
    if abs(value.imag) > IMAG_TOL:
        raise NumericalError(f"<{obs.first.value}{obs.second.value}> has imaginary part {value.imag:.3e}")
    return value.real + 0.0


def assignment_identity(n: NoncontextualAssignment) -> tuple[int, int]:
    """Both sides of the product identity under predetermined outcomes."""
    lhs = (n.x_a * n.x_b) * (n.y_a * n.y_b)
    rhs = (n.x_a * n.y_b) * (n.y_a * n.x_b)
    return lhs, rhs


def _gap(exp_xx, exp_yy, exp_xy, exp_yx) -> float:
    return exp_xx * exp_yy - exp_xy * exp_yx + 0.0


def noncontextuality_gap(rho) -> float:
    rho = validate(rho)
    return _gap(expectation(rho, XX), expectation(rho, YY), expectation(rho, XY), expectation(rho, YX))


def classify(rho, epsilon: float = DEFAULT_EPSILON) -> ContextualityVerdict:
    """Record the four expectations and whether ``|gap| <= epsilon``."""
    if not epsilon > 0:
        raise ParameterError(f"epsilon must be positive, got {epsilon}")
    rho = validate(rho)
    exps = [expectation(rho, p) for p in (XX, YY, XY, YX)]
    gap = _gap(*exps)
    return ContextualityVerdict(*exps, gap=gap, consistent=abs(gap) <= epsilon, epsilon=epsilon)
