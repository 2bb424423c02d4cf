"""Acceptance battery run by ``discordctx verify`` and by the test suite.

Every check uses a fixed seed and reports a single pass/fail line. Runtime
limits count toward the verdict.
"""
from __future__ import annotations

import itertools
import math
import os
import tempfile
import time
from dataclasses import dataclass

import numpy as np

from .contextuality import NoncontextualAssignment, assignment_identity, noncontextuality_gap
from .correlations import discord, quantum_discord, von_neumann_entropy
from .errors import ParameterError
from .linalg import hermitian_eigen
from .states import CounterexampleParams, XStateParams, make_classical, make_counterexample, make_werner, make_x_state

SEED = 20240601
WERNER_GRID = np.linspace(-1.0 / 3.0, 1.0, 101)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _timed(name: str, limit: float | None):
    def wrap(fn):
        def run() -> CheckResult:
            start = time.perf_counter()
            passed, detail = fn()
            elapsed = time.perf_counter() - start
            if limit is not None and elapsed >= limit:
                passed = False
                detail += f"; runtime {elapsed:.2f}s exceeds {limit:g}s"
            return CheckResult(name, passed, detail, elapsed)
        run.__name__ = fn.__name__
        run.check_name = name
        return run
    return wrap


@_timed("1 werner gap law", 1.0)
def check_werner_gap():
    err = max(abs(noncontextuality_gap(make_werner(c)) - c * c) for c in WERNER_GRID)
    return err <= 1e-12, f"max |gap - c^2| = {err:.2e} (tol 1e-12)"


@_timed("2 werner discord profile", 30.0)
def check_werner_discord():
    at_zero = discord(make_werner(0.0))
    values = np.array([discord(make_werner(c)) for c in WERNER_GRID])
    far = values[np.abs(WERNER_GRID) >= 0.05]
    at_one = values[-1]
    order = np.argsort(np.abs(WERNER_GRID), kind="stable")
    pos = [values[i] for i in order if WERNER_GRID[i] >= 0]
    neg = [values[i] for i in order if WERNER_GRID[i] <= 0]
    drop = max(
        max((a - b for a, b in zip(pos, pos[1:])), default=0.0),
        max((a - b for a, b in zip(neg, neg[1:])), default=0.0),
    )
    ok = at_zero <= 1e-7 and far.min() >= 1e-4 and abs(at_one - 1.0) <= 1e-6 and drop <= 1e-6
    return ok, (f"D(0) = {at_zero:.1e}, min D(|c|>=0.05) = {far.min():.2e}, "
                f"D(1) = {at_one:.9f}, largest decrease along |c| = {max(drop, 0.0):.1e}")


@_timed("3 classical diagonal states", 30.0)
def check_classical():
    rng = np.random.default_rng(SEED)
    worst_gap = worst_discord = 0.0
    for pops in rng.dirichlet(np.ones(4), size=1000):
        rho = make_classical(*pops)
        worst_gap = max(worst_gap, abs(noncontextuality_gap(rho)))
        worst_discord = max(worst_discord, discord(rho))
    ok = worst_gap <= 1e-12 and worst_discord <= 1e-6
    return ok, f"max |gap| = {worst_gap:.1e}, max discord = {worst_discord:.1e} over 1000 states"


def counterexample_grid():
    alphas = np.linspace(-0.2, 0.2, 9)
    betas = np.linspace(-0.2, 0.2, 9)
    zs = np.linspace(0.0, 0.15, 7)
    for alpha, beta, z in itertools.product(alphas, betas, zs):
        try:
            rho = make_counterexample(CounterexampleParams(alpha, beta, z))
        except ParameterError:
            continue
        yield float(alpha), float(beta), float(z), rho


@_timed("4 counterexample family", 60.0)
def check_counterexample():
    worst_gap = max_discord = exception_discord = max_conc = 0.0
    cells = 0
    for alpha, beta, z, rho in counterexample_grid():
        cells += 1
        rep = quantum_discord(rho)
        worst_gap = max(worst_gap, abs(noncontextuality_gap(rho)))
        max_discord = max(max_discord, rep.discord)
        max_conc = max(max_conc, rep.concurrence)
        if math.isclose(alpha, beta, abs_tol=1e-12) or z == 0.0:
            exception_discord = max(exception_discord, rep.discord)
    ok = (worst_gap <= 1e-12 and max_discord < 0.3 and exception_discord <= 1e-6
          and max_discord >= 1e-3 and max_conc <= 1e-9)
    return ok, (f"{cells} cells: max |gap| = {worst_gap:.1e}, max discord = {max_discord:.4f}, "
                f"max discord at alpha=beta or z=0 = {exception_discord:.1e}, max concurrence = {max_conc:.1e}")


def random_x_state(rng) -> XStateParams:
    a, b, c, d = rng.dirichlet(np.ones(4))
    w = rng.uniform(-1.0, 1.0) * math.sqrt(a * d)
    z = rng.uniform(-1.0, 1.0) * math.sqrt(b * c)
    return XStateParams(float(a), float(b), float(c), float(d), float(w), float(z))


@_timed("5 grid vs refined discord", None)
def check_oracle_equivalence():
    rng = np.random.default_rng(SEED + 5)
    worst = 0.0
    worst_increase = -math.inf
    for _ in range(100):
        rho = make_x_state(random_x_state(rng))
        coarse = discord(rho, refine=False)
        refined = discord(rho)
        worst = max(worst, abs(coarse - refined))
        worst_increase = max(worst_increase, refined - coarse)
    ok = worst <= 1e-5 and worst_increase <= 1e-5
    return ok, f"max |grid - refined| = {worst:.1e}, max increase from refinement = {worst_increase:.1e}"


@_timed("6 kernel properties", None)
def check_kernel():
    rng = np.random.default_rng(SEED + 6)
    s_mixed = von_neumann_entropy(np.eye(4) / 4)
    worst_pure = 0.0
    for _ in range(100):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi /= np.linalg.norm(psi)
        worst_pure = max(worst_pure, von_neumann_entropy(np.outer(psi, psi.conj())))
    identity_ok = all(
        lhs == rhs
        for lhs, rhs in (assignment_identity(NoncontextualAssignment(*s))
                         for s in itertools.product((1, -1), repeat=4))
    )
    worst_rec = 0.0
    for _ in range(1000):
        x = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        h = (x + x.conj().T) / 2
        worst_rec = max(worst_rec, float(np.max(np.abs(hermitian_eigen(h).reconstruct() - h))))
    ok = s_mixed == 2.0 and worst_pure <= 1e-10 and identity_ok and worst_rec <= 1e-12
    return ok, (f"S(I/4) = {s_mixed!r}, max pure-state entropy = {worst_pure:.1e}, "
                f"assignment identity {'holds' if identity_ok else 'FAILS'} on 16 cases, "
                f"max reconstruction error = {worst_rec:.1e}")


@_timed("7 sweep determinism", None)
def check_determinism():
    from .cli import main

    with tempfile.TemporaryDirectory() as tmp:
        paths = [os.path.join(tmp, f"run{i}.csv") for i in range(2)]
        codes = [main(["sweep", "werner", "--steps", "101", "--out", p]) for p in paths]
        blobs = [open(p, "rb").read() for p in paths]
    rows = blobs[0].count(b"\n") - 1
    ok = codes == [0, 0] and blobs[0] == blobs[1] and rows == 101
    return ok, f"exit codes {codes}, {rows} rows, identical = {blobs[0] == blobs[1]}"


CHECKS = (
    check_werner_gap,
    check_werner_discord,
    check_classical,
    check_counterexample,
    check_oracle_equivalence,
    check_kernel,
    check_determinism,
)


def run_all() -> list[CheckResult]:
    return [check() for check in CHECKS]
