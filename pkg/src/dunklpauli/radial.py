"""Radial eigenfunctions and an independent discretized eigensolver oracle.

The physical (outer-region) radial problem is

    [d^2/dr^2 - (K^2 - 1/4)/r^2 - M^2 w^2 r^2 + 2 M E] L(r) = 0,
    E_n = w (2n + K + 1),
    L_n(r) = N (M w)^{(K+1/2)/2} r^{K+1/2} e^{-M w r^2/2} L_n^K(M w r^2),

with N = sqrt(2 sqrt(M w) n! / Gamma(n+K+1)) fixed by int_0^inf L^2 dr = 1.
The inner-region solution has the same form with K -> K- and is not part of
the physical spectrum (the R -> 0 limit keeps the outer branch only); the
matching across the flux shell enters solely through K+ = K- - theta m_s,
which the spectrum module owns.

``fd_eigensolve`` discretizes -d^2/dr^2 + (K^2-1/4)/r^2 + M^2 w^2 r^2 with
second-order differences and Dirichlet walls, then extracts the lowest
eigenvalues with Sturm-sequence bisection (compiled kernel when available).
It is restricted to K >= 1/2 plus the K = -1/2 zero-potential edge; for
-1/2 < K < 1/2 the near-origin attractive tail would need a regularized
first node, and those K are recorded as untested by this oracle.
"""

import math
from dataclasses import dataclass

import numpy as np

from dunklpauli import _backend
from dunklpauli._fd import diff_matrix

__all__ = [
    "GridError",
    "ConvergenceError",
    "RadialState",
    "RadialGrid",
    "radial_eigenfunction",
    "ode_residual",
    "fd_eigensolve",
]


class GridError(ValueError):
    """Radial grid unfit for the requested computation."""


class ConvergenceError(RuntimeError):
    """Sturm-count bisection failed to converge or became inconsistent."""


@dataclass(frozen=True)
class RadialState:
    """Radial quantum state: node count n, effective momentum K+ > -1."""

    n: int
    K_plus: float
    M: float = 1.0
    omega: float = 1.0

    def __post_init__(self):
        if self.n < 0 or self.n != int(self.n):
            raise ValueError(f"n must be a non-negative integer, got {self.n}")
        if not self.K_plus > -1.0:
            raise ValueError(f"K_plus must exceed -1, got {self.K_plus}")
        if self.M <= 0 or self.omega <= 0:
            raise ValueError("M and omega must be positive")

    @property
    def energy(self):
        return self.omega * (2.0 * self.n + self.K_plus + 1.0)


@dataclass(frozen=True)
class RadialGrid:
    """Strictly increasing positive nodes; h set when the spacing is uniform."""

    r: np.ndarray
    h: float
    r_max: float

    @classmethod
    def uniform(cls, h, r_max):
        """Interior nodes i*h, i = 1..N-1, with Dirichlet walls at 0 and r_max."""
        n = int(round(r_max / h))
        if n < 16:
            raise GridError("grid too coarse: fewer than 16 interior nodes")
        r = np.arange(1, n, dtype=float) * h
        return cls(r=r, h=h, r_max=n * h)

    def __post_init__(self):
        r = np.asarray(self.r, dtype=float)
        if r.ndim != 1 or r.size < 2 or r[0] <= 0.0 or np.any(np.diff(r) <= 0.0):
            raise GridError("grid nodes must be strictly increasing and positive")
        object.__setattr__(self, "r", r)


def radial_eigenfunction(state: RadialState, r):
    """Normalized radial eigenfunction evaluated at r > 0 (scalar or array).

    The log of the prefactor is assembled first so large K or n cannot
    overflow the Gamma ratios.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise ValueError("radial eigenfunction defined for r > 0")
    k, mw = state.K_plus, state.M * state.omega
    from dunklpauli.specfun import laguerre, log_gamma

    log_norm = 0.5 * (
        math.log(2.0)
        + 0.5 * math.log(mw)
        + log_gamma(state.n + 1.0)
        - log_gamma(state.n + k + 1.0)
    )
    t = mw * r * r
    log_env = 0.5 * (k + 0.5) * math.log(mw) + (k + 0.5) * np.log(r) - 0.5 * t
    vals = np.exp(log_norm + log_env) * laguerre(state.n, k, t)
    return vals if vals.ndim else float(vals)


def ode_residual(state: RadialState, grid: RadialGrid, energy_offset=0.0):
    """Max relative residual of the outer radial equation on the grid.

    The second derivative comes from 9-point (order-8) finite differences on
    the analytic samples; the residual is normalized by max |2 M E L| and
    evaluated only where the full central stencil fits.  `energy_offset`
    shifts E away from w(2n+K+1) and exists for fail-injection checks.
    """
    if grid.h is None:
        raise GridError("ode_residual requires a uniform grid")
    r = grid.r
    vals = radial_eigenfunction(state, r)
    d2 = diff_matrix(r, 2, stencil=9) @ vals
    k, m, w = state.K_plus, state.M, state.omega
    e = state.energy + energy_offset
    res = d2 - ((k * k - 0.25) / r**2 + (m * w * r) ** 2) * vals + 2.0 * m * e * vals
    interior = slice(4, r.size - 4)
    scale = np.max(np.abs(2.0 * m * e * vals[interior]))
    return float(np.max(np.abs(res[interior])) / scale)


def _turning_radius(energy, M, omega):
    return math.sqrt(2.0 * energy / M) / omega


def fd_eigensolve(K_plus, M, omega, grid: RadialGrid, k_levels, tol=None):
    """Lowest k_levels eigenvalues of the discretized radial operator.

    Returns energies (operator eigenvalues divided by 2M) ascending.  The
    grid must be uniform, resolve the oscillation of the highest requested
    level, and place the Dirichlet wall beyond 1.5x its classical turning
    point.  Raises ConvergenceError if the Sturm bisection stalls.
    """
    if k_levels < 1:
        raise ValueError("k_levels must be >= 1")
    if not (K_plus >= 0.5 or K_plus == -0.5):
        raise GridError(
            f"discretized oracle restricted to K+ >= 1/2 (or the K+ = -1/2 "
            f"zero-potential edge); K+ = {K_plus} untested by this oracle"
        )
    if grid.h is None:
        raise GridError("fd_eigensolve requires a uniform grid")
    h, r = grid.h, grid.r
    e_top = omega * (2.0 * (k_levels - 1) + max(K_plus, 0.0) + 1.0)
    if grid.r_max < 1.5 * _turning_radius(e_top, M, omega):
        raise GridError(
            f"r_max = {grid.r_max:g} below 1.5x the classical turning point "
            f"of level {k_levels - 1}"
        )
    if h * math.sqrt(2.0 * M * e_top) > 0.5:
        raise GridError("grid spacing too coarse to resolve the top level")

    diag = 2.0 / h**2 + (K_plus**2 - 0.25) / r**2 + (M * omega * r) ** 2
    e2 = np.full(r.size - 1, 1.0 / h**4)
    pivmin = np.finfo(float).tiny * max(1.0, float(e2[0]))
    if tol is None:
        tol = 2.0 * M * omega * 1e-8

    hi = 2.0 * M * omega * (2.0 * (k_levels + 1) + max(K_plus, 0.0) + 3.0)
    for _ in range(60):
        if _backend.sturm_count(diag, e2, hi, pivmin) >= k_levels:
            break
        hi *= 2.0
    else:
        raise ConvergenceError("could not bracket the requested eigenvalues")
    if _backend.sturm_count(diag, e2, 0.0, pivmin) != 0:
        raise ConvergenceError("Sturm count unstable: negative eigenvalues reported")

    out = np.empty(k_levels)
    sweeps = _backend.bisect_lowest(diag, e2, out, 0.0, hi, tol, pivmin)
    if sweeps < 0 or np.any(np.diff(out) < -tol):
        raise ConvergenceError("Sturm count unstable during bisection")
    return out / (2.0 * M)
