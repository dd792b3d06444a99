"""Pure-numpy fallback for the Sturm-bisection kernels.

Same contract as the compiled ``dunklpauli._kernels``.  A scalar-shift Sturm
pass in Python would be ~100x slower than the compiled loop, so the bisection
here advances every eigenvalue bracket simultaneously and performs the Sturm
recurrence vectorized across shifts; the per-gridpoint work is then numpy
vector arithmetic instead of interpreted scalar arithmetic.
"""

import numpy as np


def _counts_vec(d, e2, xs, pivmin):
    """Sturm negative-pivot counts for a vector of shifts xs."""
    xs = np.asarray(xs, dtype=float)
    q = d[0] - xs
    counts = (q < 0.0).astype(np.int64)
    for i in range(1, d.shape[0]):
        np.copyto(q, -pivmin, where=np.abs(q) < pivmin)
        q = d[i] - xs - e2[i - 1] / q
        counts += q < 0.0
    return counts


def sturm_count(d, e2, x, pivmin):
    """Number of eigenvalues of the tridiagonal matrix strictly below x."""
    return int(_counts_vec(np.asarray(d), np.asarray(e2), [float(x)], pivmin)[0])


def bisect_lowest(d, e2, out, lo, hi, tol, pivmin, max_iter=300):
    """Lowest out.shape[0] eigenvalues by bisection, written ascending into out."""
    d = np.asarray(d, dtype=float)
    e2 = np.asarray(e2, dtype=float)
    k = out.shape[0]
    a = np.full(k, lo)
    b = np.full(k, hi)
    j = np.arange(k)
    sweeps = 0
    for _ in range(max_iter):
        active = (b - a) > tol
        if not active.any():
            break
        sweeps += 1
        mid = 0.5 * (a + b)
        stuck = (mid <= a) | (mid >= b)
        counts = _counts_vec(d, e2, mid, pivmin)
        above = counts > j
        np.copyto(b, mid, where=active & above & ~stuck)
        np.copyto(a, mid, where=active & ~above & ~stuck)
        if (active & stuck).any():
            np.copyto(a, b, where=active & stuck)
    else:
        return -1
    out[:] = 0.5 * (a + b)
    return sweeps
