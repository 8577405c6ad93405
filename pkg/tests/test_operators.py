"""Grid operators: Toeplitz assembly, convolution application, the
tridiagonal preconditioner and boundary reduction."""

import numpy as np
import pytest

from grunwald import (
    GeneratorSpec,
    GridSpec,
    SolverFailure,
    apply_grunwald,
    assemble_frac_matrix,
    assemble_preconditioner,
    beta_table,
    grunwald_weights,
    polynomial_steady_problem,
    reduce_system,
)
from grunwald.operators import checked_lu


class TestGridSpec:
    def test_spacing_and_points(self):
        grid = GridSpec(0.0, 2.0, 4)
        assert grid.h == 0.5
        assert grid.points() == pytest.approx([0.0, 0.5, 1.0, 1.5, 2.0])

    def test_too_few_subintervals(self):
        with pytest.raises(ValueError, match="at least 2"):
            GridSpec(0.0, 1.0, 1)

    def test_inverted_endpoints(self):
        with pytest.raises(ValueError, match="a < b"):
            GridSpec(1.0, 0.0, 4)


class TestAssemble:
    def test_first_order_unshifted_is_backward_difference(self):
        grid = GridSpec(0.0, 2.0, 2)  # h = 1
        spec = GeneratorSpec(alpha=1, shift=0, beta=(1, -1))
        weights = grunwald_weights(spec, 2)
        dense = assemble_frac_matrix(weights, grid, "left").dense
        expected = np.array(
            [[1.0, 0.0, 0.0], [-1.0, 1.0, 0.0], [0.0, -1.0, 1.0]]
        )
        assert np.allclose(dense, expected, atol=1e-15)

    def test_shifted_first_row_by_hand(self):
        grid = GridSpec(0.0, 1.0, 3)
        weights = grunwald_weights(beta_table(2, 1, 1.5), 4)
        dense = assemble_frac_matrix(weights, grid, "left").dense
        w = weights.values
        scale = grid.h**1.5
        assert dense[0] == pytest.approx(
            np.array([w[1], w[0], 0.0, 0.0]) / scale
        )
        # entry (i, j) = w_{i-j+1}: second row reads w2 w1 w0 0
        assert dense[1] == pytest.approx(
            np.array([w[2], w[1], w[0], 0.0]) / scale
        )

    def test_right_side_is_transpose(self):
        grid = GridSpec(0.0, 1.0, 6)
        weights = grunwald_weights(beta_table(2, 1, 1.5), 7)
        left = assemble_frac_matrix(weights, grid, "left").dense
        right = assemble_frac_matrix(weights, grid, "right").dense
        assert np.array_equal(right, left.T)

    def test_real_shift_rejected(self):
        grid = GridSpec(0.0, 1.0, 4)
        spec = GeneratorSpec(alpha=1.5, shift=0.75, beta=(1, -1))
        weights = grunwald_weights(spec, 6)
        with pytest.raises(ValueError, match="integer shift"):
            assemble_frac_matrix(weights, grid, "left")

    def test_insufficient_weights_rejected(self):
        grid = GridSpec(0.0, 1.0, 8)
        weights = grunwald_weights(beta_table(2, 1, 1.5), 4)
        with pytest.raises(ValueError, match="weights"):
            assemble_frac_matrix(weights, grid, "left")

    def test_matrix_apply_method(self):
        grid = GridSpec(0.0, 1.0, 8)
        weights = grunwald_weights(beta_table(2, 1, 1.5), 9)
        matrix = assemble_frac_matrix(weights, grid, "left")
        u = np.arange(9.0)
        assert matrix.apply(u) == pytest.approx(matrix.dense @ u)
        assert matrix.shift == 1
        assert matrix.alpha == 1.5


class TestApply:
    def test_zero_input(self):
        grid = GridSpec(0.0, 1.0, 8)
        weights = grunwald_weights(beta_table(2, 1, 1.5), 9)
        out = apply_grunwald(np.zeros(9), weights, grid, "left")
        assert np.all(out == 0.0)

    def test_backward_difference_case(self):
        grid = GridSpec(0.0, 1.0, 4)
        spec = GeneratorSpec(alpha=1, shift=0, beta=(1, -1))
        weights = grunwald_weights(spec, 4)
        u = np.array([0.0, 1.0, 4.0, 9.0, 16.0])
        got = apply_grunwald(u, weights, grid, "left")
        h = grid.h
        expected = np.concatenate(([u[0] / h], (u[1:] - u[:-1]) / h))
        assert got == pytest.approx(expected)

    @pytest.mark.parametrize("side", ["left", "right"])
    @pytest.mark.parametrize("n", [16, 64, 128])
    def test_matches_matrix_action(self, side, n):
        rng = np.random.default_rng(42 + n)
        grid = GridSpec(0.0, 1.0, n)
        weights = grunwald_weights(beta_table(2, 1, 1.5), n + 1)
        matrix = assemble_frac_matrix(weights, grid, side)
        u = rng.standard_normal(n + 1)
        direct = matrix.dense @ u
        conv = apply_grunwald(u, weights, grid, side)
        scale = np.max(np.abs(direct))
        assert np.max(np.abs(direct - conv)) <= 1e-13 * scale

    def test_constant_input_equals_partial_sums(self):
        # for u = 1 the convolution telescopes into the cumulative weight
        # sums, which tend to zero; this is the discrete version of the
        # derivative of a constant vanishing (the last row is excluded:
        # its stencil sticks out past the boundary)
        n = 2000
        grid = GridSpec(0.0, 1.0, n)
        weights = grunwald_weights(beta_table(2, 1, 1.5), n + 1)
        out = apply_grunwald(np.ones(n + 1), weights, grid, "left")
        sums = weights.partial_sums()
        assert out[:-1] * grid.h**1.5 == pytest.approx(sums[1:-1], abs=1e-12)
        assert abs(out[-2] * grid.h**1.5) < 1e-3

    def test_monomial_residual_second_order(self):
        # rows 0..n-1 carry the h^2 truncation residual (the last row
        # reads the ghost point past the boundary and is never solved on)
        problem = polynomial_steady_problem(1.5)
        maxima = []
        for n in (512, 1024):
            grid = GridSpec(0.0, 1.0, n)
            weights = grunwald_weights(beta_table(2, 1, 1.5), n + 1)
            approx = apply_grunwald(
                problem.exact(grid.points()), weights, grid, "left"
            )
            residual = np.abs(approx - problem.source(grid.points()))
            maxima.append(residual[:-1].max())
        assert maxima[0] / maxima[1] == pytest.approx(4.0, abs=0.5)
        assert maxima[1] == pytest.approx(1.22e-3, rel=0.05)

    def test_bad_side(self):
        grid = GridSpec(0.0, 1.0, 4)
        weights = grunwald_weights(beta_table(2, 1, 1.5), 5)
        with pytest.raises(ValueError, match="side"):
            apply_grunwald(np.zeros(5), weights, grid, "up")

    def test_wrong_length_input(self):
        grid = GridSpec(0.0, 1.0, 4)
        weights = grunwald_weights(beta_table(2, 1, 1.5), 5)
        with pytest.raises(ValueError, match="grid values"):
            apply_grunwald(np.zeros(4), weights, grid, "left")


class TestPreconditioner:
    def test_zero_coefficient_is_identity(self):
        grid = GridSpec(0.0, 1.0, 5)
        dense = assemble_preconditioner(0.0, grid).dense
        assert np.array_equal(dense, np.eye(6))

    def test_interior_row_sums_are_one(self):
        grid = GridSpec(0.0, 1.0, 9)
        dense = assemble_preconditioner(1.0 / 12.0, grid).dense
        assert dense[1:-1].sum(axis=1) == pytest.approx(np.ones(8))

    def test_classical_compact_stencil(self):
        # a2(1, 2) = 1/12 gives the familiar (1/12, 5/6, 1/12) stencil
        grid = GridSpec(0.0, 1.0, 4)
        dense = assemble_preconditioner(1.0 / 12.0, grid).dense
        assert dense[2] == pytest.approx([0, 1 / 12, 5 / 6, 1 / 12, 0])

    def test_symmetric(self):
        grid = GridSpec(0.0, 1.0, 7)
        dense = assemble_preconditioner(0.17, grid).dense
        assert np.array_equal(dense, dense.T)

    @pytest.mark.parametrize("alpha", [1.0, 1.5, 2.0])
    def test_energy_ratio_within_band(self, alpha):
        from grunwald import a2_coefficient

        rng = np.random.default_rng(5)
        grid = GridSpec(0.0, 1.0, 64)
        a2 = float(a2_coefficient(1, alpha))
        reduced = assemble_preconditioner(a2, grid).dense[1:-1, 1:-1]
        samples = rng.standard_normal((200, 63))
        ratios = np.einsum("ij,ij->i", samples @ reduced, samples)
        ratios /= np.einsum("ij,ij->i", samples, samples)
        assert ratios.min() > 0.2
        assert ratios.max() <= 1.0 + 1e-12


class TestReduceSystem:
    def test_homogeneous_boundary_truncates(self):
        rng = np.random.default_rng(3)
        matrix = rng.standard_normal((6, 6))
        rhs = rng.standard_normal(6)
        reduced, adjusted = reduce_system(matrix, rhs, 0.0, 0.0)
        assert np.array_equal(reduced, matrix[1:-1, 1:-1])
        assert np.array_equal(adjusted, rhs[1:-1])

    def test_identity_moves_first_column(self):
        matrix = np.eye(4)
        rhs = np.array([1.0, 2.0, 3.0, 4.0])
        reduced, adjusted = reduce_system(matrix, rhs, 1.0, 0.0)
        assert np.array_equal(reduced, np.eye(2))
        # identity has zero off-diagonal boundary columns, rhs unchanged
        assert adjusted == pytest.approx([2.0, 3.0])
        dense = np.eye(4)
        dense[1, 0] = 2.0
        _, adjusted = reduce_system(dense, rhs, 1.0, 0.0)
        assert adjusted == pytest.approx([0.0, 3.0])

    def test_no_interior(self):
        with pytest.raises(ValueError, match="interior"):
            reduce_system(np.eye(2), np.zeros(2), 0.0, 0.0)


class TestCheckedLU:
    def test_singular_matrix_raises(self):
        with pytest.raises(SolverFailure, match="singular"):
            checked_lu(np.zeros((3, 3)), context="test")

    def test_regular_matrix_solves(self):
        from grunwald.operators import solve_factored

        matrix = np.array([[2.0, 1.0], [1.0, 3.0]])
        factors = checked_lu(matrix)
        x = solve_factored(factors, np.array([3.0, 4.0]))
        assert matrix @ x == pytest.approx([3.0, 4.0])
