"""Crank-Nicolson diffusion stepping, the benchmark source, and the
energy-stability estimate."""

import numpy as np
import pytest
from scipy.special import gamma

from grunwald import (
    DiffusionProblem,
    GridSpec,
    apply_grunwald,
    beta_table,
    cn_solve,
    fractional_poly_source,
    grunwald_weights,
    polynomial_diffusion_problem,
    stability_estimate_check,
)


def zero_x(x):
    return np.zeros_like(np.asarray(x, dtype=float))


def final_error(problem, n, m, scheme):
    grid = GridSpec(problem.a, problem.b, n)
    trajectory = cn_solve(problem, grid, m, scheme)
    exact = problem.exact(grid.points(), problem.t_final)
    return float(np.max(np.abs(trajectory[-1] - exact)))


class TestProblemValidation:
    def kwargs(self, **overrides):
        base = dict(
            a=0.0, b=1.0, t_final=1.0, alpha=1.5, k_left=1.0, k_right=1.0,
            source=lambda x, t: zero_x(x), init=zero_x,
            bc_left=lambda t: 0.0, bc_right=lambda t: 0.0,
        )
        base.update(overrides)
        return base

    def test_negative_coefficient_rejected(self):
        with pytest.raises(ValueError, match="nonnegative"):
            DiffusionProblem(**self.kwargs(k_left=-1.0))

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError, match="both"):
            DiffusionProblem(**self.kwargs(k_left=0.0, k_right=0.0))

    def test_boundary_convention_enforced(self):
        with pytest.raises(ValueError, match="left boundary"):
            DiffusionProblem(**self.kwargs(bc_left=lambda t: 1.0))
        with pytest.raises(ValueError, match="right boundary"):
            DiffusionProblem(**self.kwargs(bc_right=lambda t: t))

    def test_nonzero_boundary_allowed_when_coefficient_vanishes(self):
        problem = DiffusionProblem(
            **self.kwargs(k_right=0.0, bc_right=lambda t: np.exp(-t))
        )
        assert problem.k_right == 0.0

    def test_alpha_domain(self):
        with pytest.raises(ValueError, match="alpha"):
            DiffusionProblem(**self.kwargs(alpha=0.9))


class TestCNSolve:
    def test_zero_data_stays_zero(self):
        problem = DiffusionProblem(
            a=0.0, b=1.0, t_final=1.0, alpha=1.5, k_left=1.0, k_right=1.0,
            source=lambda x, t: zero_x(x), init=zero_x,
            bc_left=lambda t: 0.0, bc_right=lambda t: 0.0,
        )
        trajectory = cn_solve(problem, GridSpec(0.0, 1.0, 16), 8)
        assert np.max(np.abs(trajectory)) == 0.0

    def test_initial_row_is_sampled_data(self):
        problem = polynomial_diffusion_problem(1.5)
        grid = GridSpec(0.0, 1.0, 16)
        trajectory = cn_solve(problem, grid, 4)
        assert np.array_equal(trajectory[0], problem.init(grid.points()))

    def test_order2_benchmark_cell(self):
        problem = polynomial_diffusion_problem(1.5)
        assert final_error(problem, 64, 64, "order2") == pytest.approx(
            5.8863e-07, rel=0.02
        )

    def test_order3_benchmark_cell(self):
        problem = polynomial_diffusion_problem(1.5)
        assert final_error(problem, 64, 513, "order3") == pytest.approx(
            1.1401e-08, rel=0.02
        )

    def test_order2_band(self):
        problem = polynomial_diffusion_problem(1.9)
        errors = [final_error(problem, n, n, "order2") for n in (32, 64, 128)]
        for coarse, fine in zip(errors, errors[1:]):
            assert 1.9 <= np.log2(coarse / fine) <= 2.1

    def test_nonzero_time_varying_boundary(self):
        # left-only equation so the right boundary may move; exercises
        # the boundary columns of both B and the preconditioner
        alpha = 1.5
        c8 = 10.0 * gamma(9) / gamma(9 - alpha)

        problem = DiffusionProblem(
            a=0.0, b=1.0, t_final=1.0, alpha=alpha, k_left=1.0, k_right=0.0,
            source=lambda x, t: -np.exp(-t) * (
                10.0 * np.asarray(x) ** 8
                + c8 * np.asarray(x) ** (8 - alpha)
            ),
            init=lambda x: 10.0 * np.asarray(x) ** 8,
            bc_left=lambda t: 0.0,
            bc_right=lambda t: 10.0 * np.exp(-t),
            exact=lambda x, t: 10.0 * np.asarray(x) ** 8 * np.exp(-t),
        )
        errors2 = [final_error(problem, n, n, "order2") for n in (32, 64, 128)]
        for coarse, fine in zip(errors2, errors2[1:]):
            assert np.log2(coarse / fine) == pytest.approx(2.0, abs=0.15)
        errors3 = [
            final_error(problem, n, int(np.ceil(n**1.5)), "order3")
            for n in (32, 64, 128)
        ]
        for coarse, fine in zip(errors3, errors3[1:]):
            assert np.log2(coarse / fine) == pytest.approx(3.0, abs=0.15)

    def test_classical_limit_alpha_two(self):
        problem = polynomial_diffusion_problem(2.0)
        assert final_error(problem, 32, 32, "order2") < 2e-6

    def test_bad_step_count(self):
        problem = polynomial_diffusion_problem(1.5)
        with pytest.raises(ValueError, match="time step"):
            cn_solve(problem, GridSpec(0.0, 1.0, 16), 0)


class TestFractionalPolySource:
    def test_midpoint_symmetry(self):
        alpha, m = 1.5, 5
        value = fractional_poly_source(0.5, m, alpha)
        expected = 2.0 * gamma(m + 1) / gamma(m + 1 - alpha) * 0.5 ** (m - alpha)
        assert value == pytest.approx(expected, rel=1e-14)

    def test_classical_limit_matches_second_derivative(self):
        # as alpha -> 2 the pair tends to the second derivative of
        # x^5 + (1-x)^5, which is 20 x^3 + 20 (1-x)^3
        x = 0.3
        value = fractional_poly_source(x, 5, 2.0 - 1e-9)
        assert value == pytest.approx(20 * x**3 + 20 * (1 - x) ** 3, rel=1e-6)

    def test_domain_checked(self):
        with pytest.raises(ValueError, match=r"\[0, 1\]"):
            fractional_poly_source(1.5, 5, 1.5)
        with pytest.raises(ValueError, match="exponent"):
            fractional_poly_source(0.5, 1, 1.5)

    @pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9])
    def test_discrete_residual_oracle(self, alpha):
        # u_t - D_l u - D_r u - f should vanish to O(h^2) when evaluated
        # with the discrete operators on the exact solution at t = 0
        problem = polynomial_diffusion_problem(alpha)
        maxima = []
        for n in (256, 512):
            grid = GridSpec(0.0, 1.0, n)
            x = grid.points()
            u = problem.init(x)
            weights = grunwald_weights(beta_table(2, 1, alpha), n + 1)
            left = apply_grunwald(u, weights, grid, "left")
            right = apply_grunwald(u, weights, grid, "right")
            residual = (-u) - left - right - problem.source(x, 0.0)
            maxima.append(np.max(np.abs(residual[1:-1])))
        ratio = maxima[0] / maxima[1]
        assert ratio == pytest.approx(4.0, abs=0.7)


class TestStabilityEstimate:
    def test_order2_unforced_monotone(self):
        problem = polynomial_diffusion_problem(1.5)
        report = stability_estimate_check(
            problem, GridSpec(0.0, 1.0, 32), 40, "order2",
            seed=3, source_amplitude=0.0,
        )
        assert report.ok
        assert np.all(np.diff(report.norms) <= 1e-12)

    def test_order3_unforced_bounded(self):
        problem = polynomial_diffusion_problem(1.5)
        report = stability_estimate_check(
            problem, GridSpec(0.0, 1.0, 32), 40, "order3",
            seed=3, source_amplitude=0.0,
        )
        assert report.ok
        assert np.all(report.norms <= np.sqrt(5) * report.norms[0] + 1e-12)

    @pytest.mark.parametrize("scheme", ["order2", "order3"])
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_forced_bound_holds(self, scheme, seed):
        problem = polynomial_diffusion_problem(1.3)
        report = stability_estimate_check(
            problem, GridSpec(0.0, 1.0, 24), 30, scheme, seed=seed
        )
        assert report.ok, report.max_ratio

    def test_zero_start_zero_source_stays_zero(self):
        problem = polynomial_diffusion_problem(1.5)
        report = stability_estimate_check(
            problem, GridSpec(0.0, 1.0, 16), 10, "order3",
            seed=1, source_amplitude=0.0, init_amplitude=0.0,
        )
        assert report.ok
        assert np.max(report.norms) == 0.0

    def test_requires_homogeneous_boundary(self):
        alpha = 1.5
        problem = DiffusionProblem(
            a=0.0, b=1.0, t_final=1.0, alpha=alpha, k_left=1.0, k_right=0.0,
            source=lambda x, t: zero_x(x), init=zero_x,
            bc_left=lambda t: 0.0, bc_right=lambda t: 1.0,
        )
        with pytest.raises(ValueError, match="homogeneous"):
            stability_estimate_check(problem, GridSpec(0.0, 1.0, 16), 4)
