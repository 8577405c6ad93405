"""Steady-state fractional boundary-value solver and stability scanner.

Solves  D^alpha u = f  on [a, b] with Dirichlet data using the shifted
order-2 generator, either directly (order2) or premultiplied by the
quasi-compact tridiagonal preconditioner (order3). The scanner probes
generators of any supported order for the sign-definiteness and solve
quality that make implicit schemes trustworthy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .generators import a2_coefficient, beta_table, grunwald_weights
from .operators import (
    GridSpec,
    SolverFailure,
    assemble_frac_matrix,
    assemble_preconditioner,
    checked_lu,
    reduce_system,
    solve_factored,
)

__all__ = [
    "SteadyProblem",
    "ScanEntry",
    "StabilityReport",
    "solve_steady",
    "stability_scan",
]

SCHEMES = ("order2", "order3")


@dataclass(frozen=True)
class SteadyProblem:
    """Left-derivative steady problem D^alpha u = f with Dirichlet data."""

    a: float
    b: float
    alpha: float
    source: Callable[[np.ndarray], np.ndarray]
    phi0: float
    phi1: float
    exact: Optional[Callable[[np.ndarray], np.ndarray]] = None

    def __post_init__(self):
        if not 1.0 < float(self.alpha) <= 2.0:
            raise ValueError(
                f"steady solver needs alpha in (1, 2], got {self.alpha}"
            )
        if not self.b > self.a:
            raise ValueError("domain endpoints must satisfy a < b")


def _check_grid(problem, grid: GridSpec) -> None:
    if grid.a != problem.a or grid.b != problem.b:
        raise ValueError(
            f"grid [{grid.a}, {grid.b}] does not match problem domain "
            f"[{problem.a}, {problem.b}]"
        )


def _check_scheme(scheme: str) -> None:
    if scheme not in SCHEMES:
        raise ValueError(
            f"unknown scheme {scheme!r}; expected one of {SCHEMES}"
        )


def _solve_reduced(matrix, rhs_full, phi0, phi1, context):
    reduced, adjusted = reduce_system(matrix, rhs_full, phi0, phi1)
    factors = checked_lu(reduced, context=context)
    return solve_factored(factors, adjusted)


def solve_steady(problem: SteadyProblem, grid: GridSpec,
                 scheme: str = "order2") -> np.ndarray:
    """Solve the steady problem on the grid; returns all n+1 grid values
    with the boundary entries set to the Dirichlet data.

    order2 solves A U = F directly; order3 premultiplies the source by
    the quasi-compact preconditioner (full rows, so boundary source
    values participate) before the same reduced solve.
    """
    _check_grid(problem, grid)
    _check_scheme(scheme)
    alpha = float(problem.alpha)
    generator = beta_table(2, 1, alpha)
    weights = grunwald_weights(generator, grid.n + 1)
    operator = assemble_frac_matrix(weights, grid, "left")
    x = grid.points()
    rhs = np.asarray(problem.source(x), dtype=float)
    if scheme == "order3":
        precond = assemble_preconditioner(a2_coefficient(1, alpha), grid)
        rhs = precond.dense @ rhs
    interior = _solve_reduced(
        operator.dense, rhs, problem.phi0, problem.phi1,
        context=f"steady {scheme} solve at alpha={alpha}, n={grid.n}",
    )
    solution = np.empty(grid.n + 1)
    solution[0] = problem.phi0
    solution[-1] = problem.phi1
    solution[1:-1] = interior
    return solution


@dataclass(frozen=True)
class ScanEntry:
    """Stability probe outcome for one fractional order."""

    alpha: float
    max_rayleigh: float
    solve_error: Optional[float]
    baseline_error: Optional[float]
    solve_failed: bool
    stable: bool
    reason: str


@dataclass(frozen=True)
class StabilityReport:
    order: int
    shift: int
    grid_n: int
    entries: tuple

    @property
    def stable_alphas(self) -> tuple:
        return tuple(e.alpha for e in self.entries if e.stable)

    @property
    def unstable_alphas(self) -> tuple:
        return tuple(e.alpha for e in self.entries if not e.stable)

    def stable_onset(self) -> Optional[float]:
        """Smallest alpha from which every scanned alpha upward is stable."""
        onset = None
        for entry in reversed(self.entries):
            if entry.stable:
                onset = entry.alpha
            else:
                break
        return onset


def _benchmark_problem(alpha: float):
    # local import: problems depends on this module
    from .problems import polynomial_steady_problem

    return polynomial_steady_problem(alpha)


def _benchmark_error(order, shift, alpha, grid: GridSpec) -> float:
    problem = _benchmark_problem(alpha)
    generator = beta_table(order, shift, alpha)
    weights = grunwald_weights(generator, grid.n + shift)
    operator = assemble_frac_matrix(weights, grid, "left")
    x = grid.points()
    rhs = np.asarray(problem.source(x), dtype=float)
    interior = _solve_reduced(
        operator.dense, rhs, problem.phi0, problem.phi1,
        context=f"scan solve order={order} alpha={alpha} n={grid.n}",
    )
    solution = np.concatenate(([problem.phi0], interior, [problem.phi1]))
    return float(np.max(np.abs(solution - problem.exact(x))))


def stability_scan(order: int, shift: int, alphas: Sequence[float],
                   grid: GridSpec, *, n_samples: int = 500,
                   rayleigh_tol: float = 1e-8, blowup_factor: float = 10.0,
                   baseline_n: int = 16,
                   seed: int = 1822) -> StabilityReport:
    """Probe a generator family across fractional orders.

    For each alpha the scan (i) samples Rayleigh quotients v'Av / v'v of
    the operator matrix with random vectors (positive values betray a
    loss of negative definiteness) and (ii) for alpha > 1 solves the
    monomial benchmark problem on the scan grid and on a coarse baseline
    grid. An alpha is flagged unstable when any quotient exceeds
    rayleigh_tol, a solve fails, or the error exceeds blowup_factor times
    the baseline error. Failures are data, not exceptions.
    """
    rng = np.random.default_rng(seed)
    entries = []
    for alpha in alphas:
        alpha = float(alpha)
        generator = beta_table(order, shift, alpha)
        weights = grunwald_weights(generator, grid.n + shift)
        operator = assemble_frac_matrix(weights, grid, "left")
        samples = rng.standard_normal((n_samples, grid.n + 1))
        quads = np.einsum("ij,ij->i", samples @ operator.dense, samples)
        norms = np.einsum("ij,ij->i", samples, samples)
        max_rayleigh = float(np.max(quads / norms))
        solve_error = None
        baseline_error = None
        solve_failed = False
        reasons = []
        if max_rayleigh > rayleigh_tol:
            reasons.append(
                f"positive Rayleigh quotient {max_rayleigh:.3e}"
            )
        if alpha > 1.0:
            base_grid = GridSpec(grid.a, grid.b, baseline_n)
            try:
                baseline_error = _benchmark_error(
                    order, shift, alpha, base_grid
                )
                solve_error = _benchmark_error(order, shift, alpha, grid)
            except SolverFailure as exc:
                solve_failed = True
                reasons.append(f"solve failed: {exc}")
            else:
                if solve_error > blowup_factor * baseline_error:
                    reasons.append(
                        f"error {solve_error:.3e} exceeds "
                        f"{blowup_factor:g}x baseline {baseline_error:.3e}"
                    )
        entries.append(
            ScanEntry(
                alpha=alpha,
                max_rayleigh=max_rayleigh,
                solve_error=solve_error,
                baseline_error=baseline_error,
                solve_failed=solve_failed,
                stable=not reasons,
                reason="; ".join(reasons),
            )
        )
    return StabilityReport(
        order=order, shift=shift, grid_n=grid.n, entries=tuple(entries)
    )
