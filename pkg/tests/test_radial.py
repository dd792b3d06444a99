import numpy as np
import pytest
from scipy.integrate import quad

from dunklpauli.radial import (
    ConvergenceError,
    GridError,
    RadialGrid,
    RadialState,
    fd_eigensolve,
    ode_residual,
    radial_eigenfunction,
)


class TestEigenfunction:
    def test_node_free_shape_at_k_half(self):
        # n=0, K=1/2, M w = 1: L proportional to r e^{-r^2/2}
        st = RadialState(n=0, K_plus=0.5)
        r = np.linspace(0.3, 3.0, 7)
        vals = radial_eigenfunction(st, r)
        ratio = vals / (r * np.exp(-0.5 * r * r))
        assert np.allclose(ratio, ratio[0], rtol=1e-13)

    @pytest.mark.parametrize(
        "n,k_plus,m_omega",
        [(0, 0.5, 1.0), (2, 2.0, 1.0), (1, 3.5, 1.0), (3, 6.0, 1.0), (1, 2.0, 2.5)],
    )
    def test_unit_norm(self, n, k_plus, m_omega):
        st = RadialState(n=n, K_plus=k_plus, M=m_omega, omega=1.0)
        val, err = quad(
            lambda r: radial_eigenfunction(st, r) ** 2,
            0.0,
            16.0,
            limit=400,
            epsabs=1e-13,
            epsrel=1e-13,
        )
        assert err < 1e-10
        assert val == pytest.approx(1.0, abs=1e-9)

    def test_orthogonality_same_k(self):
        a = RadialState(n=0, K_plus=2.0)
        b = RadialState(n=2, K_plus=2.0)
        val, _ = quad(
            lambda r: radial_eigenfunction(a, r) * radial_eigenfunction(b, r),
            0.0,
            16.0,
            limit=300,
        )
        assert abs(val) <= 1e-9

    def test_domain_checks(self):
        with pytest.raises(ValueError):
            RadialState(n=0, K_plus=-1.0)
        st = RadialState(n=0, K_plus=0.5)
        with pytest.raises(ValueError):
            radial_eigenfunction(st, np.array([0.0, 1.0]))


class TestOdeResidual:
    def test_exact_solution_small_residual(self):
        grid = RadialGrid.uniform(2e-3, 10.0)
        assert ode_residual(RadialState(n=0, K_plus=2.0), grid) <= 1e-6

    def test_flux_shifted_state(self):
        # K+ carrying a flux shift: K+ = 3.5 = 4 - 0.5
        grid = RadialGrid.uniform(2e-3, 10.0)
        assert ode_residual(RadialState(n=3, K_plus=3.5), grid) <= 1e-6

    def test_wrong_energy_detected(self):
        grid = RadialGrid.uniform(2e-3, 10.0)
        res = ode_residual(RadialState(n=0, K_plus=2.0), grid, energy_offset=0.1)
        assert res >= 1e-2


class TestFdEigensolve:
    def test_k_half_lowest_three(self):
        grid = RadialGrid.uniform(1e-3, 12.0)
        levels = fd_eigensolve(0.5, 1.0, 1.0, grid, 3)
        assert levels == pytest.approx([1.5, 3.5, 5.5], abs=1e-4)

    def test_minus_half_edge_zero_potential(self):
        # (K^2 - 1/4) = 0: Dirichlet problem, energies w(2n + 3/2)
        grid = RadialGrid.uniform(1e-3, 12.0)
        levels = fd_eigensolve(-0.5, 1.0, 1.0, grid, 3)
        assert levels == pytest.approx([1.5, 3.5, 5.5], abs=1e-4)

    def test_unsupported_k_raises(self):
        grid = RadialGrid.uniform(2e-3, 12.0)
        with pytest.raises(GridError):
            fd_eigensolve(0.2, 1.0, 1.0, grid, 2)

    def test_second_order_convergence(self):
        # Richardson: eigenvalue drift shrinks ~4x when h halves
        e_exact = 3.0  # n=0, K=2
        drifts = []
        for h in (8e-3, 4e-3, 2e-3):
            grid = RadialGrid.uniform(h, 12.0)
            drifts.append(abs(fd_eigensolve(2.0, 1.0, 1.0, grid, 1)[0] - e_exact))
        assert 3.0 <= drifts[0] / drifts[1] <= 5.0
        assert 3.0 <= drifts[1] / drifts[2] <= 5.0

    def test_flux_shift_tracks_linearly(self):
        # dE/dtheta = -w m_s at fixed (n, l): K+ = K- - theta m_s
        grid = RadialGrid.uniform(2e-3, 12.0)
        k_minus, m_s, w = 4.0, 1, 1.0
        thetas = (0.0, 0.4, 0.8)
        energies = [
            fd_eigensolve(k_minus - t * m_s, 1.0, w, grid, 1)[0] for t in thetas
        ]
        slopes = np.diff(energies) / np.diff(thetas)
        assert slopes == pytest.approx([-w * m_s, -w * m_s], abs=1e-3)

    def test_grid_guards(self):
        with pytest.raises(GridError):
            fd_eigensolve(2.0, 1.0, 1.0, RadialGrid.uniform(2e-3, 3.0), 4)
        with pytest.raises(GridError):
            fd_eigensolve(2.0, 1.0, 1.0, RadialGrid.uniform(0.3, 12.0), 4)

    def test_scaled_mass_and_frequency(self):
        grid = RadialGrid.uniform(1e-3, 12.0 / np.sqrt(2.0 * 0.5))
        levels = fd_eigensolve(2.0, 2.0, 0.5, grid, 2)
        assert levels == pytest.approx([0.5 * 3.0, 0.5 * 5.0], abs=1e-4)


def test_grid_validation():
    with pytest.raises(GridError):
        RadialGrid(r=np.array([0.0, 1.0]), h=1.0, r_max=1.0)
    with pytest.raises(GridError):
        RadialGrid(r=np.array([1.0, 0.5]), h=0.5, r_max=1.0)
