# cython: boundscheck=False, wraparound=False, cdivision=True
"""Hot kernels: Sturm-sequence bisection for symmetric tridiagonal matrices.

Compiled core behind dunklpauli._backend; the numpy fallback in _kernels_py
implements the identical algorithm.  The matrix is diag(d) with squared
off-diagonal entries e2 (length n-1).
"""


cdef int _count(double[::1] d, double[::1] e2, double x, double pivmin) nogil:
    cdef Py_ssize_t i, n = d.shape[0]
    cdef int count = 0
    cdef double q = d[0] - x
    if q < 0.0:
        count += 1
    for i in range(1, n):
        if q > -pivmin and q < pivmin:
            q = -pivmin
        q = d[i] - x - e2[i - 1] / q
        if q < 0.0:
            count += 1
    return count


def sturm_count(double[::1] d, double[::1] e2, double x, double pivmin):
    """Number of eigenvalues of the tridiagonal matrix strictly below x."""
    return _count(d, e2, x, pivmin)


def bisect_lowest(double[::1] d, double[::1] e2, double[::1] out,
                  double lo, double hi, double tol, double pivmin,
                  int max_iter=300):
    """Lowest out.shape[0] eigenvalues by bisection, written ascending into out.

    Requires count(lo) == 0 and count(hi) >= k.  Returns the number of
    bisection sweeps used (for the convergence diagnostics of the caller).
    """
    cdef Py_ssize_t k = out.shape[0], j
    cdef int it, c
    cdef double a, b, mid
    cdef int sweeps = 0
    for j in range(k):
        a = lo
        b = hi
        it = 0
        while b - a > tol:
            it += 1
            if it > max_iter:
                return -1
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b:
                break
            c = _count(d, e2, mid, pivmin)
            if c > j:
                b = mid
            else:
                a = mid
        out[j] = 0.5 * (a + b)
        sweeps += it
    return sweeps
