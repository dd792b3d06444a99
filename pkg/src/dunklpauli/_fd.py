"""Finite-difference weights on arbitrary 1D grids (Fornberg recursion).

Used for the high-order derivative checks; weights are exact for polynomials
up to the stencil size, so polynomial test functions differentiate to
rounding error even at one-sided edge stencils.
"""

import numpy as np


def fornberg_weights(x0, xs, order):
    """Weights w with f^(order)(x0) ~= sum_j w[j] f(xs[j]).

    Classic recursion (Fornberg 1988); len(xs) > order required.
    """
    xs = np.asarray(xs, dtype=float)
    n = xs.size
    if n <= order:
        raise ValueError("stencil too small for requested derivative order")
    c = np.zeros((n, order + 1))
    c[0, 0] = 1.0
    c1 = 1.0
    c4 = xs[0] - x0
    for i in range(1, n):
        mn = min(i, order)
        c2 = 1.0
        c5 = c4
        c4 = xs[i] - x0
        for j in range(i):
            c3 = xs[i] - xs[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c[:, order]


def diff_matrix(x, order, stencil=9):
    """Dense differentiation matrix of given derivative order on grid x.

    Each row uses the `stencil` nearest grid points (central in the interior,
    one-sided at the edges).
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    stencil = min(stencil, n)
    mat = np.zeros((n, n))
    half = stencil // 2
    for i in range(n):
        j0 = min(max(i - half, 0), n - stencil)
        cols = np.arange(j0, j0 + stencil)
        mat[i, cols] = fornberg_weights(x[i], x[cols], order)
    return mat
