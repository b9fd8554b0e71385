"""Monte Carlo check of bridge covariances.

The state vector (X_n, X_{n-1}, ..., X_1) is a linear Gaussian Markov process,
so one grid step is sampled exactly: a Taylor shift of the current state plus
Gaussian noise whose covariance is known in closed form. Component i of the
stored state is the i-th derivative of X_n, i.e. X_{n-i}.

Every path owns a Philox stream keyed by the seed with the path index in the
counter, so results do not depend on block size or worker count.
"""
from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bridge_cov import cov_bridge, drift_polys
from .exact_core import RatMatrix, inv_factorial
from .index_sets import IndexSetJ, JLike, as_jset

SEED_MASK = (1 << 64) - 1
DEFAULT_BLOCK = 8192


@dataclass(frozen=True)
class SimConfig:
    n: int
    steps: int
    num_paths: int
    seed: int
    J: IndexSetJ

    def __init__(self, n: int, steps: int, num_paths: int, seed: int, J: JLike = ()):
        if n < 1:
            raise ValueError(f"process order must be positive, got {n}")
        if steps < 2:
            raise ValueError(f"need at least 2 grid steps, got {steps}")
        if num_paths < 1:
            raise ValueError(f"need at least one path, got {num_paths}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "num_paths", num_paths)
        object.__setattr__(self, "seed", int(seed) & SEED_MASK)
        object.__setattr__(self, "J", as_jset(n, J))

    def times(self) -> list[Fraction]:
        return [Fraction(k, self.steps) for k in range(self.steps + 1)]


@dataclass(frozen=True)
class PathEnsemble:
    config: SimConfig
    values: np.ndarray = field(repr=False)  # (num_paths, steps + 1, n)


@dataclass(frozen=True)
class CovComparison:
    grid: list
    empirical: np.ndarray
    exact: np.ndarray
    z_scores: np.ndarray
    max_abs_err: float
    max_z_score: float
    num_paths: int

    def passed(self, z_cap: float = 4.0, abs_tol: float = 0.01) -> bool:
        return self.max_z_score <= z_cap and self.max_abs_err <= abs_tol

    def to_json(self) -> dict:
        return {
            "num_paths": self.num_paths,
            "max_abs_err": self.max_abs_err,
            "max_z_score": self.max_z_score,
            "passed": self.passed(),
            "cells": [
                {"s": float(s), "t": float(t), "empirical": float(e), "exact": float(x), "z": float(z)}
                for (s, t), e, x, z in zip(self.grid, self.empirical, self.exact, self.z_scores)
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "t", "empirical", "exact", "z"])
        for (s, t), e, x, z in zip(self.grid, self.empirical, self.exact, self.z_scores):
            w.writerow([float(s), float(t), repr(float(e)), repr(float(x)), repr(float(z))])
        return buf.getvalue()

    def table(self) -> str:
        lines = [f"{'s':>6} {'t':>6} {'empirical':>12} {'exact':>12} {'z':>8}"]
        for (s, t), e, x, z in zip(self.grid, self.empirical, self.exact, self.z_scores):
            lines.append(f"{float(s):6.3f} {float(t):6.3f} {e:12.6f} {x:12.6f} {z:8.3f}")
        lines.append(f"paths = {self.num_paths}, max |err| = {self.max_abs_err:.6f}, max z = {self.max_z_score:.3f}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# exact one-step transition
# ---------------------------------------------------------------------------


def noise_covariance(n: int, dt: Fraction) -> RatMatrix:
    """Cov(X_a(dt), X_b(dt)) started from zero, indexed by derivative order."""
    dt = Fraction(dt)
    rows = []
    for i in range(n):
        a = n - i
        row = []
        for k in range(n):
            b = n - k
            row.append(dt ** (a + b - 1) * inv_factorial(a - 1) * inv_factorial(b - 1) / (a + b - 1))
        rows.append(row)
    return RatMatrix(rows)


def transition_mean(n: int, dt: Fraction) -> RatMatrix:
    """X_{n-i}(t+dt) = sum_{k>=i} dt^(k-i)/(k-i)! X_{n-k}(t) + noise."""
    dt = Fraction(dt)
    return RatMatrix([[dt ** (k - i) * inv_factorial(k - i) if k >= i else Fraction(0) for k in range(n)] for i in range(n)])


def _path_normals(seed: int, start: int, stop: int, steps: int, n: int) -> np.ndarray:
    out = np.empty((stop - start, steps, n))
    for row, path in enumerate(range(start, stop)):
        rng = np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, path, 0]))
        out[row] = rng.standard_normal((steps, n))
    return out


def _simulate_block(args) -> np.ndarray:
    n, steps, seed, start, stop = args
    dt = Fraction(1, steps)
    mean = np.array(transition_mean(n, dt).to_float())
    chol = np.linalg.cholesky(np.array(noise_covariance(n, dt).to_float()))
    z = _path_normals(seed, start, stop, steps, n)
    values = np.zeros((stop - start, steps + 1, n))
    # explicit sums in a fixed order rather than BLAS, whose kernel choice
    # depends on the batch size and would make paths block-dependent
    for k in range(steps):
        prev, noise = values[:, k, :], z[:, k, :]
        for i in range(n):
            acc = np.zeros(stop - start)
            for m in range(i, n):
                acc += mean[i, m] * prev[:, m]
            for m in range(i + 1):
                acc += chol[i, m] * noise[:, m]
            values[:, k + 1, i] = acc
    return values


def simulate_xn(config: SimConfig, block_size: int = DEFAULT_BLOCK, workers: int = 1) -> PathEnsemble:
    """Sample the free process (no conditioning) on the uniform grid."""
    bounds = range(0, config.num_paths, block_size)
    jobs = [(config.n, config.steps, config.seed, lo, min(lo + block_size, config.num_paths)) for lo in bounds]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_simulate_block, jobs))
    else:
        blocks = [_simulate_block(job) for job in jobs]
    return PathEnsemble(config, np.concatenate(blocks, axis=0))


# ---------------------------------------------------------------------------
# bridges and covariance comparison
# ---------------------------------------------------------------------------


def drift_derivative_table(n: int, J: JLike, steps: int) -> dict[int, np.ndarray]:
    """{j: array (steps+1, n) of P_j^(i)(t_k)}, evaluated exactly then rounded."""
    J = as_jset(n, J)
    times = [Fraction(k, steps) for k in range(steps + 1)]
    table = {}
    for j, P in drift_polys(n, J).items():
        derivs = [P.derivative(i) for i in range(n)]
        table[j] = np.array([[float(d(t)) for d in derivs] for t in times])
    return table


def make_bridge_paths(ens: PathEnsemble, J: JLike) -> PathEnsemble:
    """Y^(i)(t) = X_{n-i}(t) - sum_j P_j^(i)(t) X_j(1) for every state component."""
    cfg = ens.config
    J = as_jset(cfg.n, J)
    values = ens.values.copy()
    for j, table in drift_derivative_table(cfg.n, J, cfg.steps).items():
        terminal = ens.values[:, -1, cfg.n - j]
        values -= terminal[:, None, None] * table[None, :, :]
    return PathEnsemble(SimConfig(cfg.n, cfg.steps, cfg.num_paths, cfg.seed, J), values)


def terminal_residuals(bridge: PathEnsemble) -> np.ndarray:
    """Corrected X_j(1) for j in J, per path (should vanish)."""
    cfg = bridge.config
    cols = [cfg.n - j for j in cfg.J]
    return bridge.values[:, -1, cols]


def compare_covariance(bridge: PathEnsemble, J: JLike, grid_stride: int) -> CovComparison:
    cfg = bridge.config
    if cfg.num_paths < 2:
        raise ValueError("covariance comparison needs at least two paths")
    if grid_stride < 1:
        raise ValueError("grid stride must be positive")
    J = as_jset(cfg.n, J)
    exact_cov = cov_bridge(cfg.n, J)
    idx = list(range(grid_stride, cfg.steps, grid_stride))
    Y = bridge.values[:, :, 0]
    grid, emp, exact, z = [], [], [], []
    for a in idx:
        for b in idx:
            s, t = Fraction(a, cfg.steps), Fraction(b, cfg.steps)
            prod = Y[:, a] * Y[:, b]
            m = float(prod.mean())
            se = float(prod.std(ddof=1)) / np.sqrt(cfg.num_paths)
            x = float(exact_cov(s, t))
            grid.append((s, t))
            emp.append(m)
            exact.append(x)
            z.append(abs(m - x) / se if se > 0 else (0.0 if m == x else np.inf))
    emp, exact, z = np.array(emp), np.array(exact), np.array(z)
    return CovComparison(
        grid=grid,
        empirical=emp,
        exact=exact,
        z_scores=z,
        max_abs_err=float(np.max(np.abs(emp - exact))) if len(emp) else 0.0,
        max_z_score=float(np.max(z)) if len(z) else 0.0,
        num_paths=cfg.num_paths,
    )
