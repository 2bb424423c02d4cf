"""Flat analysis records shared by the CLI and the acceptance battery."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .contextuality import DEFAULT_EPSILON, classify
from .correlations import DEFAULT_GRID, quantum_discord
from .errors import DiscordError
from .states import (
    CounterexampleParams,
    XStateParams,
    make_classical,
    make_counterexample,
    make_werner,
    make_x_state,
)

RESULT_COLUMNS = (
    "entropy_total",
    "mutual_information",
    "classical_correlation",
    "discord",
    "concurrence",
    "exp_xx",
    "exp_yy",
    "exp_xy",
    "exp_yx",
    "gap",
    "consistent",
)


@dataclass(frozen=True)
class Family:
    name: str
    params: tuple[str, ...]  # columns written before the results
    swept: tuple[str, ...]  # parameters that take a range in a sweep
    defaults: dict[str, tuple[float, float, int]]
    build: Callable[[dict], object]
    derive: Callable[[dict], dict] = field(default=lambda p: p)
    has_skipped: bool = True

    @property
    def columns(self) -> tuple[str, ...]:
        tail = ("skipped",) if self.has_skipped else ()
        return self.params + RESULT_COLUMNS + tail


def _with_d(p: dict) -> dict:
    out = dict(p)
    out["d"] = 1.0 - p["a"] - p["b"] - p["c"]
    return out


FAMILIES = {
    "werner": Family(
        "werner", ("c",), ("c",), {"c": (-1.0 / 3.0, 1.0, 101)},
        lambda p: make_werner(p["c"]), has_skipped=False,
    ),
    "counterexample": Family(
        "counterexample", ("alpha", "beta", "z"), ("alpha", "beta", "z"),
        {"alpha": (-0.2, 0.2, 9), "beta": (-0.2, 0.2, 9), "z": (0.0, 0.15, 7)},
        lambda p: make_counterexample(CounterexampleParams(p["alpha"], p["beta"], p["z"])),
    ),
    "classical": Family(
        "classical", ("a", "b", "c", "d"), ("a", "b", "c"),
        {"a": (0.0, 1.0, 11), "b": (0.0, 1.0, 11), "c": (0.0, 1.0, 11)},
        lambda p: make_classical(p["a"], p["b"], p["c"], p["d"]), derive=_with_d,
    ),
    "xstate": Family(
        "xstate", ("a", "b", "c", "d", "w", "z"), ("a", "b", "c", "w", "z"),
        {"a": (0.0, 1.0, 5), "b": (0.0, 1.0, 5), "c": (0.0, 1.0, 5),
         "w": (-0.5, 0.5, 5), "z": (-0.5, 0.5, 5)},
        lambda p: make_x_state(XStateParams(p["a"], p["b"], p["c"], p["d"], p["w"], p["z"])),
        derive=_with_d,
    ),
}


def analyze(family: Family, params: dict, epsilon: float = DEFAULT_EPSILON,
            grid=DEFAULT_GRID) -> dict:
    """Build the state and return one flat record; invalid parameters propagate."""
    rho = family.build(params)
    report = quantum_discord(rho, grid=grid)
    verdict = classify(rho, epsilon)
    record = {k: params[k] for k in family.params}
    record.update(
        entropy_total=report.entropy_total,
        mutual_information=report.mutual_information,
        classical_correlation=report.classical_correlation,
        discord=report.discord,
        concurrence=report.concurrence,
        exp_xx=verdict.exp_xx,
        exp_yy=verdict.exp_yy,
        exp_xy=verdict.exp_xy,
        exp_yx=verdict.exp_yx,
        gap=verdict.gap,
        consistent=verdict.consistent,
    )
    if family.has_skipped:
        record["skipped"] = False
    return {k: (float(v) if isinstance(v, (float, np.floating)) else v) for k, v in record.items()}


def axis(lo: float, hi: float, steps: int) -> np.ndarray:
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    if lo > hi:
        raise ValueError(f"range min {lo} exceeds max {hi}")
    if steps == 1:
        return np.array([lo])
    return np.linspace(lo, hi, steps)


def grid_cells(family: Family, ranges: dict[str, tuple[float, float, int]]):
    """Parameter dicts in row-major order, outermost loop over the first parameter."""
    axes = [axis(*ranges[name]) for name in family.swept]
    for values in itertools.product(*axes):
        yield family.derive({k: float(v) for k, v in zip(family.swept, values)})


@dataclass
class SweepResult:
    records: list[dict]
    cells: int
    skipped: int

    @property
    def max_discord(self) -> float:
        return max((r["discord"] for r in self.records), default=0.0)

    @property
    def max_abs_gap(self) -> float:
        return max((abs(r["gap"]) for r in self.records), default=0.0)


def sweep(family: Family, ranges: dict, epsilon: float = DEFAULT_EPSILON,
          grid=DEFAULT_GRID) -> SweepResult:
    """Evaluate every grid cell; cells outside the family's valid region are counted and dropped."""
    records, cells, skipped = [], 0, 0
    for params in grid_cells(family, ranges):
        cells += 1
        try:
            records.append(analyze(family, params, epsilon, grid))
        except DiscordError:
            skipped += 1
    return SweepResult(records, cells, skipped)


def format_value(column: str, value, param_columns=()) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    value = float(value) + 0.0
    if column in param_columns:
        return repr(value)
    return f"{value:.12g}"


def to_csv(family: Family, records: list[dict]) -> str:
    lines = [",".join(family.columns)]
    for rec in records:
        lines.append(",".join(format_value(c, rec[c], family.params) for c in family.columns))
    return "\n".join(lines) + "\n"
