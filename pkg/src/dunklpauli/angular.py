"""Angular eigenfunctions and Dunkl operators on a reflection-symmetric grid.

Operators (R1: phi -> pi - phi, R2: phi -> -phi):

    J = i [ d/dphi + nu2 cot(phi)(1 - R2) - nu1 tan(phi)(1 - R1) ]
    B = -1/2 d^2/dphi^2 + (nu1 tan(phi) - nu2 cot(phi)) d/dphi
        + nu1 (1-R1)/(2 cos^2) + nu2 (1-R2)/(2 sin^2)
    J^2 = 2 B + 2 nu1 nu2 (1 - R1 R2)

Eigenfunctions of J with eigenvalue lambda (s = branch sign):

    even sector (eps = +1), l = 1, 2, ...:
        Phi = [A_l P_l^{(nu1-1/2, nu2-1/2)}(u)
               + i s A'_l sin(phi)cos(phi) P_{l-1}^{(nu1+1/2, nu2+1/2)}(u)] / sqrt(2)
        lambda = s 2 sqrt(l (l+nu1+nu2))
    odd sector (eps = -1), l = 1/2, 3/2, ...:
        Phi = [B_l cos(phi) P_{l-1/2}^{(nu1+1/2, nu2-1/2)}(u)
               - i s B'_l sin(phi) P_{l-1/2}^{(nu1-1/2, nu2+1/2)}(u)] / sqrt(2)
        lambda = s 2 sqrt((l+nu1)(l+nu2))

Argument conventions for u: the default "cos2" uses u = -cos(2 phi), which
keeps u inside [-1, 1], makes every component a fixed parity vector of both
reflections, and - with the unit-component constants from ``specfun`` - gives
an orthonormal family under the Dunkl weight (verified by exact Gauss-Jacobi
quadrature).  The alternative "printed" convention evaluates the circulating
closed form literally with u = -2 cos(phi); the Jacobi recurrence is valid
there too, but the resulting functions are neither reflection-covariant nor
orthonormal - ``dunklpauli verify`` reports both so the adjudication stays
visible.  The imaginary-part signs above (+s even, -s odd) are the pairing
that the eigen-relation test singles out empirically.

Grid: n_points divisible by 4, nodes offset by half a spacing so that both
reflections act as exact index permutations and tan/cot poles are never hit.
Derivatives are spectral (FFT); the weighted grid inner product uses the
periodic rectangle rule, whose accuracy degrades to O(h^{1+2 min(nu)}) at the
weight cusps for non-integer 2 nu - the tight orthonormality oracles
therefore live in ``phi_overlap_exact``.
"""

import math
from dataclasses import dataclass

import numpy as np

from dunklpauli import specfun
from dunklpauli._fd import diff_matrix
from dunklpauli.spectrum import ModelParams, lambda_eps

__all__ = [
    "AngularGrid",
    "AngularFunction",
    "build_phi",
    "apply_J",
    "apply_B",
    "phi_overlap_exact",
    "dunkl_derivative_1d",
    "random_bandlimited",
]

CONVENTIONS = ("cos2", "printed")


@dataclass(frozen=True)
class AngularGrid:
    """Uniform periodic grid with the Dunkl weight and reflection index maps."""

    nu1: float
    nu2: float
    n_points: int
    phi: np.ndarray
    weight: np.ndarray
    idx_r1: np.ndarray
    idx_r2: np.ndarray

    @classmethod
    def build(cls, nu1, nu2, n_points=512):
        if n_points < 64 or n_points % 4 != 0:
            raise ValueError("n_points must be >= 64 and divisible by 4")
        h = 2.0 * np.pi / n_points
        phi = (np.arange(n_points) + 0.5) * h
        k = np.arange(n_points)
        idx_r1 = (n_points // 2 - 1 - k) % n_points
        idx_r2 = n_points - 1 - k
        weight = np.abs(np.cos(phi)) ** (2 * nu1) * np.abs(np.sin(phi)) ** (2 * nu2)
        return cls(nu1, nu2, n_points, phi, weight, idx_r1, idx_r2)

    @property
    def spacing(self):
        return 2.0 * np.pi / self.n_points

    def reflect1(self, values):
        return np.asarray(values)[..., self.idx_r1]

    def reflect2(self, values):
        return np.asarray(values)[..., self.idx_r2]

    def derivative(self, values, order=1):
        """Spectral derivative; exact for band-limited samples."""
        modes = np.fft.fftfreq(self.n_points, 1.0 / self.n_points)
        if order % 2 == 1:
            modes = modes.copy()
            modes[self.n_points // 2] = 0.0
        return np.fft.ifft((1j * modes) ** order * np.fft.fft(values))

    def inner(self, f, g):
        """Weighted inner product by the periodic rectangle rule."""
        return complex(self.spacing * np.sum(self.weight * np.conj(f) * g))


@dataclass(frozen=True)
class AngularFunction:
    """Grid samples of an angular function with its sector bookkeeping.

    eps1/eps2 are the reflection parities of the real component; the imaginary
    component carries the opposite pair, so only the joint parity
    R1 R2 Phi = sector * Phi holds for the full function.
    """

    values: np.ndarray
    sector: int
    l: float
    branch: int
    eps1: int
    eps2: int
    convention: str = "cos2"


def _jacobi_argument(phi, convention):
    if convention == "cos2":
        return -np.cos(2.0 * phi)
    if convention == "printed":
        return -2.0 * np.cos(phi)
    raise ValueError(f"unknown convention {convention!r}; use one of {CONVENTIONS}")


def build_phi(p: ModelParams, l, branch, grid: AngularGrid, convention="cos2"):
    """Sample the angular eigenfunction Phi on the grid (unit weighted norm)."""
    if branch not in (-1, 1):
        raise ValueError("branch must be +1 or -1")
    u = _jacobi_argument(grid.phi, convention)
    s = float(branch)
    if p.epsilon == 1:
        a_l, a_lp = specfun.angular_norm_even(l, p.nu1, p.nu2)
        re = a_l * specfun.jacobi(int(l), p.nu1 - 0.5, p.nu2 - 0.5, u)
        im = (
            s
            * a_lp
            * np.sin(grid.phi)
            * np.cos(grid.phi)
            * specfun.jacobi(int(l) - 1, p.nu1 + 0.5, p.nu2 + 0.5, u)
        )
        eps1 = eps2 = 1
    else:
        b_l, b_lp = specfun.angular_norm_odd(l, p.nu1, p.nu2)
        j = int(l - 0.5)
        re = b_l * np.cos(grid.phi) * specfun.jacobi(j, p.nu1 + 0.5, p.nu2 - 0.5, u)
        im = -s * b_lp * np.sin(grid.phi) * specfun.jacobi(j, p.nu1 - 0.5, p.nu2 + 0.5, u)
        eps1, eps2 = -1, 1
    values = (re + 1j * im) / math.sqrt(2.0)
    return AngularFunction(values, p.epsilon, float(l), branch, eps1, eps2, convention)


def _values(f):
    return f.values if isinstance(f, AngularFunction) else np.asarray(f)


def apply_J(f, p: ModelParams, grid: AngularGrid):
    """i [ d/dphi + nu2 cot (1-R2) - nu1 tan (1-R1) ] applied to grid samples."""
    v = _values(f)
    cot = np.cos(grid.phi) / np.sin(grid.phi)
    tan = np.sin(grid.phi) / np.cos(grid.phi)
    return 1j * (
        grid.derivative(v, 1)
        + p.nu2 * cot * (v - grid.reflect2(v))
        - p.nu1 * tan * (v - grid.reflect1(v))
    )


def apply_B(f, p: ModelParams, grid: AngularGrid):
    """Angular Dunkl Laplacian piece paired with J via J^2 = 2B + 2 nu1 nu2 (1-R1R2)."""
    v = _values(f)
    cos2 = np.cos(grid.phi) ** 2
    sin2 = np.sin(grid.phi) ** 2
    cot = np.cos(grid.phi) / np.sin(grid.phi)
    tan = np.sin(grid.phi) / np.cos(grid.phi)
    return (
        -0.5 * grid.derivative(v, 2)
        + (p.nu1 * tan - p.nu2 * cot) * grid.derivative(v, 1)
        + p.nu1 * (v - grid.reflect1(v)) / (2.0 * cos2)
        + p.nu2 * (v - grid.reflect2(v)) / (2.0 * sin2)
    )


def eigen_relation_error(p: ModelParams, l, branch, grid: AngularGrid, convention="cos2"):
    """Sup-norm error of J Phi = lambda Phi, relative to sup |Phi|."""
    fn = build_phi(p, l, branch, grid, convention)
    lam = lambda_eps(p, l, branch)
    err = apply_J(fn, p, grid) - lam * fn.values
    return float(np.max(np.abs(err)) / np.max(np.abs(fn.values)))


def _overlap_pieces(p: ModelParams, l1, l2):
    """Component overlaps (I_rr, I_ii) under the Dunkl weight, exactly."""
    n1, n2 = p.nu1, p.nu2
    if p.epsilon == 1:
        a1, a1p = specfun.angular_norm_even(l1, n1, n2)
        a2, a2p = specfun.angular_norm_even(l2, n1, n2)
        deg = int(l1 + l2)
        i_rr = (
            a1
            * a2
            * 2.0 ** (1.0 - n1 - n2)
            * specfun.jacobi_weighted_dot(
                lambda u: specfun.jacobi(int(l1), n1 - 0.5, n2 - 0.5, u),
                lambda u: specfun.jacobi(int(l2), n1 - 0.5, n2 - 0.5, u),
                n1 - 0.5,
                n2 - 0.5,
                deg,
            )
        )
        i_ii = (
            a1p
            * a2p
            * 2.0 ** (-1.0 - n1 - n2)
            * specfun.jacobi_weighted_dot(
                lambda u: specfun.jacobi(int(l1) - 1, n1 + 0.5, n2 + 0.5, u),
                lambda u: specfun.jacobi(int(l2) - 1, n1 + 0.5, n2 + 0.5, u),
                n1 + 0.5,
                n2 + 0.5,
                deg,
            )
        )
    else:
        b1, b1p = specfun.angular_norm_odd(l1, n1, n2)
        b2, b2p = specfun.angular_norm_odd(l2, n1, n2)
        j1, j2 = int(l1 - 0.5), int(l2 - 0.5)
        deg = j1 + j2
        i_rr = (
            b1
            * b2
            * 2.0 ** (-n1 - n2)
            * specfun.jacobi_weighted_dot(
                lambda u: specfun.jacobi(j1, n1 + 0.5, n2 - 0.5, u),
                lambda u: specfun.jacobi(j2, n1 + 0.5, n2 - 0.5, u),
                n1 + 0.5,
                n2 - 0.5,
                deg,
            )
        )
        i_ii = (
            b1p
            * b2p
            * 2.0 ** (-n1 - n2)
            * specfun.jacobi_weighted_dot(
                lambda u: specfun.jacobi(j1, n1 - 0.5, n2 + 0.5, u),
                lambda u: specfun.jacobi(j2, n1 - 0.5, n2 + 0.5, u),
                n1 - 0.5,
                n2 + 0.5,
                deg,
            )
        )
    return i_rr, i_ii


def phi_overlap_exact(p: ModelParams, l1, l2, branch1=1, branch2=1):
    """<Phi_{l1,b1}, Phi_{l2,b2}>_w over the circle, by exact quadrature.

    Valid for the "cos2" convention, where the components are polynomials in
    u = -cos(2 phi) and the cross (real x imaginary) terms vanish by parity.
    """
    i_rr, i_ii = _overlap_pieces(p, l1, l2)
    return 0.5 * (i_rr + branch1 * branch2 * i_ii)


def dunkl_derivative_1d(values, x, nu, axis=-1):
    """One-dimensional Dunkl derivative D f = f' + (nu/x)(f - f(-x)).

    `x` must be symmetric about 0 (x reversed equals -x) and exclude 0; the
    derivative uses 9-point finite-difference stencils, exact for polynomials
    up to degree 8.  `values` may be N-d; the grid runs along `axis`.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x == 0.0) or not np.allclose(x[::-1], -x, rtol=0, atol=1e-14):
        raise ValueError("grid must be symmetric about 0 and exclude 0")
    values = np.asarray(values, dtype=float)
    values = np.moveaxis(values, axis, -1)
    deriv = values @ diff_matrix(x, 1, stencil=min(9, x.size)).T
    reflected = values[..., ::-1]
    out = deriv + (nu / x) * (values - reflected)
    return np.moveaxis(out, -1, axis)


def random_bandlimited(grid: AngularGrid, max_mode, rng):
    """Random complex trigonometric polynomial with modes |m| <= max_mode."""
    if max_mode >= grid.n_points // 4:
        raise ValueError("max_mode too large for the grid")
    coeff = rng.standard_normal(2 * max_mode + 1) + 1j * rng.standard_normal(
        2 * max_mode + 1
    )
    modes = np.arange(-max_mode, max_mode + 1)
    return (coeff[None, :] * np.exp(1j * np.outer(grid.phi, modes))).sum(axis=1)
