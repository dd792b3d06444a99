import math

import numpy as np
import pytest

from dunklpauli import angular
from dunklpauli.angular import AngularGrid, apply_B, apply_J, build_phi, dunkl_derivative_1d
from dunklpauli.spectrum import ModelParams, lambda_eps


def even(nu1, nu2):
    return ModelParams(nu1=nu1, nu2=nu2, epsilon=1, theta=0.0)


def odd(nu1, nu2):
    return ModelParams(nu1=nu1, nu2=nu2, epsilon=-1, theta=0.0)


@pytest.fixture(scope="module")
def flat_grid():
    return AngularGrid.build(0.0, 0.0, 256)


class TestGrid:
    def test_rejects_bad_sizes(self):
        with pytest.raises(ValueError):
            AngularGrid.build(0.0, 0.0, 62)
        with pytest.raises(ValueError):
            AngularGrid.build(0.0, 0.0, 130)

    def test_reflections_are_permutations(self, flat_grid):
        g = flat_grid
        assert np.allclose(np.sort(g.idx_r1), np.arange(g.n_points))
        assert np.allclose((2 * np.pi - g.phi[g.idx_r2]) % (2 * np.pi), g.phi)
        assert np.allclose((np.pi - g.phi[g.idx_r1]) % (2 * np.pi), g.phi)

    def test_nodes_avoid_poles(self, flat_grid):
        assert np.min(np.abs(np.cos(flat_grid.phi))) > 1e-3
        assert np.min(np.abs(np.sin(flat_grid.phi))) > 1e-3

    def test_spectral_derivative_exact_for_modes(self, flat_grid):
        # roundoff scales with the (N/2)^2 multiplier of the Nyquist mode
        f = np.exp(3j * flat_grid.phi)
        d = flat_grid.derivative(f, 1)
        assert np.max(np.abs(d - 3j * f)) < 1e-12
        d2 = flat_grid.derivative(f, 2)
        assert np.max(np.abs(d2 + 9.0 * f)) < 1e-10


class TestBuildPhi:
    def test_flat_odd_sector_is_plane_wave(self, flat_grid):
        p = odd(0.0, 0.0)
        fn = build_phi(p, 0.5, 1, flat_grid)
        expected = np.exp(-1j * flat_grid.phi) / math.sqrt(2.0 * math.pi)
        assert np.max(np.abs(fn.values - expected)) < 1e-14

    def test_even_sector_joint_parity(self):
        p = even(0.3, -0.3)
        grid = AngularGrid.build(p.nu1, p.nu2, 256)
        fn = build_phi(p, 1, 1, grid)
        refl = grid.reflect1(grid.reflect2(fn.values))
        assert np.max(np.abs(refl - fn.values)) < 1e-13

    def test_odd_sector_joint_parity(self):
        p = odd(0.25, 0.25)
        grid = AngularGrid.build(p.nu1, p.nu2, 256)
        fn = build_phi(p, 1.5, -1, grid)
        refl = grid.reflect1(grid.reflect2(fn.values))
        assert np.max(np.abs(refl + fn.values)) < 1e-13

    def test_unit_norm_quadrature(self):
        p = even(0.35, 0.2)
        grid = AngularGrid.build(p.nu1, p.nu2, 256)
        for l in (1, 2, 4):
            assert abs(angular.phi_overlap_exact(p, l, l) - 1.0) <= 1e-10

    def test_orthogonality(self):
        p = odd(0.25, 0.25)
        for l1 in (0.5, 1.5, 2.5):
            for l2 in (0.5, 1.5, 2.5):
                want = 1.0 if l1 == l2 else 0.0
                assert abs(angular.phi_overlap_exact(p, l1, l2) - want) <= 1e-8

    def test_grid_inner_matches_for_smooth_weight(self, flat_grid):
        # nu = 0: weight is 1, rectangle rule is spectrally accurate
        p = odd(0.0, 0.0)
        f1 = build_phi(p, 0.5, 1, flat_grid)
        f2 = build_phi(p, 1.5, 1, flat_grid)
        assert abs(flat_grid.inner(f1.values, f1.values) - 1.0) < 1e-12
        assert abs(flat_grid.inner(f1.values, f2.values)) < 1e-12


class TestApplyJ:
    def test_plane_wave_eigenvalue(self, flat_grid):
        p = odd(0.0, 0.0)
        for branch in (1, -1):
            fn = build_phi(p, 0.5, branch, flat_grid)
            out = apply_J(fn, p, flat_grid)
            assert np.max(np.abs(out - branch * fn.values)) < 1e-12

    def test_constant_annihilated(self):
        p = even(0.4, 0.1)
        grid = AngularGrid.build(p.nu1, p.nu2, 256)
        out = apply_J(np.ones(grid.n_points, dtype=complex), p, grid)
        assert np.max(np.abs(out)) < 1e-12

    @pytest.mark.parametrize(
        "p,l",
        [
            (even(0.3, -0.3), 1),
            (even(0.3, -0.3), 3),
            (even(0.2, 0.6), 2),
            (odd(0.25, 0.25), 0.5),
            (odd(0.25, 0.25), 2.5),
            (odd(0.1, 0.7), 1.5),
        ],
    )
    @pytest.mark.parametrize("branch", [1, -1])
    def test_eigen_relation(self, p, l, branch):
        grid = AngularGrid.build(p.nu1, p.nu2, 512)
        assert angular.eigen_relation_error(p, l, branch, grid) <= 1e-6

    def test_printed_convention_breaks_eigen_relation(self):
        p = even(0.3, -0.3)
        grid = AngularGrid.build(p.nu1, p.nu2, 512)
        assert angular.eigen_relation_error(p, 2, 1, grid, convention="printed") > 1e-2


class TestApplyB:
    def test_constant_annihilated_flat(self, flat_grid):
        p = even(0.0, 0.0)
        out = apply_B(np.ones(flat_grid.n_points, dtype=complex), p, flat_grid)
        assert np.max(np.abs(out)) < 1e-12

    def test_phi_is_eigenfunction(self):
        # B Phi = (lambda^2/2 - nu1 nu2 (1-eps)) Phi
        for p, l in ((even(0.3, -0.3), 2), (odd(0.25, 0.25), 1.5)):
            grid = AngularGrid.build(p.nu1, p.nu2, 512)
            fn = build_phi(p, l, 1, grid)
            lam = lambda_eps(p, l, 1)
            mu = 0.5 * lam * lam - p.nu1 * p.nu2 * (1.0 - p.epsilon)
            out = apply_B(fn, p, grid)
            err = np.max(np.abs(out - mu * fn.values)) / np.max(np.abs(fn.values))
            assert err <= 1e-6

    def test_J_squared_identity_random_functions(self):
        p = even(0.35, 0.15)
        grid = AngularGrid.build(p.nu1, p.nu2, 512)
        rng = np.random.default_rng(3)
        for _ in range(20):
            f = angular.random_bandlimited(grid, 30, rng)
            lhs = apply_J(apply_J(f, p, grid), p, grid)
            rhs = 2.0 * apply_B(f, p, grid) + 2.0 * p.nu1 * p.nu2 * (
                f - grid.reflect1(grid.reflect2(f))
            )
            assert np.max(np.abs(lhs - rhs)) / np.max(np.abs(f)) <= 1e-6


def symmetric_grid(n=60, h=0.05):
    return (np.arange(n) - (n - 1) / 2.0) * h


class TestDunkl1D:
    def test_even_polynomial(self):
        x = symmetric_grid()
        out = dunkl_derivative_1d(x**2, x, nu=0.7)
        assert np.max(np.abs(out - 2.0 * x)) < 1e-10

    def test_linear_polynomial(self):
        x = symmetric_grid()
        nu = 0.3
        out = dunkl_derivative_1d(x, x, nu=nu)
        assert np.max(np.abs(out - (1.0 + 2.0 * nu))) < 1e-10

    def test_rejects_grid_with_origin(self):
        x = np.linspace(-1.0, 1.0, 21)
        with pytest.raises(ValueError):
            dunkl_derivative_1d(x, x, nu=0.1)

    def test_deformed_commutator(self):
        # D(x f) - x D(f) = f + 2 nu R f, polynomials up to degree 6
        x = symmetric_grid(80, 0.04)
        rng = np.random.default_rng(17)
        for nu in (0.0, 0.25, 0.8):
            for _ in range(8):
                f = np.polynomial.polynomial.polyval(x, rng.standard_normal(7))
                lhs = dunkl_derivative_1d(x * f, x, nu) - x * dunkl_derivative_1d(f, x, nu)
                rhs = f + 2.0 * nu * f[::-1]
                assert np.max(np.abs(lhs - rhs)) <= 1e-9


class TestDunkl2D:
    def test_deformed_heisenberg_algebra(self):
        x = symmetric_grid(40, 0.08)
        y = symmetric_grid(40, 0.08)
        nu1, nu2 = 0.3, 0.55
        rng = np.random.default_rng(23)
        coeffs = rng.standard_normal((6, 6))
        f = np.polynomial.polynomial.polyval2d(*np.meshgrid(x, y, indexing="ij"), coeffs)
        xx = x[:, None]
        yy = y[None, :]

        def d1(g):
            return dunkl_derivative_1d(g, x, nu1, axis=0)

        def d2(g):
            return dunkl_derivative_1d(g, y, nu2, axis=1)

        r1 = lambda g: g[::-1, :]
        r2 = lambda g: g[:, ::-1]

        # diagonal commutators
        lhs = d1(xx * f) - xx * d1(f)
        assert np.max(np.abs(lhs - (f + 2.0 * nu1 * r1(f)))) <= 1e-9
        lhs = d2(yy * f) - yy * d2(f)
        assert np.max(np.abs(lhs - (f + 2.0 * nu2 * r2(f)))) <= 1e-9
        # off-diagonal commutators vanish
        assert np.max(np.abs(d2(xx * f) - xx * d2(f))) <= 1e-9
        assert np.max(np.abs(d1(yy * f) - yy * d1(f))) <= 1e-9
        # [D1, D2] = 0
        assert np.max(np.abs(d1(d2(f)) - d2(d1(f)))) <= 1e-9
