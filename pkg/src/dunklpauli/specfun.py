"""Special functions for the Dunkl-Pauli oscillator.

Generalized Laguerre and Jacobi polynomials by three-term recurrence
(vectorized over the argument), log-gamma, and the normalization constants of
the angular eigenfunctions.  All Gamma-function ratios are assembled in log
space so the constants stay finite for degrees up to ~10^3.

Angular normalization conventions
---------------------------------
Under the Dunkl weight w(phi) = |cos phi|^{2 nu1} |sin phi|^{2 nu2} the even
and odd angular eigenfunctions are built from two components each (see
``dunklpauli.angular``).  The constants returned here give every component
unit weighted norm on the circle:

    A_l   = sqrt[(2l+nu1+nu2) G(l+nu1+nu2)     l!        / (2 G(l+nu1+1/2) G(l+nu2+1/2))]
    A'_l  = sqrt[(2l+nu1+nu2) G(l+nu1+nu2+1)   (l-1)!    / (2 G(l+nu1+1/2) G(l+nu2+1/2))]
    B_l   = sqrt[(2l+nu1+nu2) G(l+nu1+nu2+1/2) (l-1/2)!  / (2 G(l+nu1+1)   G(l+nu2))]
    B'_l  = sqrt[(2l+nu1+nu2) G(l+nu1+nu2+1/2) (l-1/2)!  / (2 G(l+nu1)     G(l+nu2+1))]

with G = Gamma and (l-1/2)! = Gamma(l+1/2).  B_l and B'_l are defined by the
unit-norm requirement (checked against Gauss-Jacobi quadrature); a circulating
closed-form variant of B'_l with Gamma(l+nu1+nu2+1) in place of
Gamma(l+nu1+nu2+1/2) is provided as ``angular_norm_odd_gamma_variant`` purely
for side-by-side comparison in verification reports.
"""

import math

import numpy as np

__all__ = [
    "DomainError",
    "laguerre",
    "laguerre_deriv",
    "jacobi",
    "log_gamma",
    "angular_norm_even",
    "angular_norm_odd",
    "angular_norm_odd_gamma_variant",
    "jacobi_weighted_dot",
]


class DomainError(ValueError):
    """Parameter outside the mathematical domain of an operation."""


def _check_degree(n):
    if n != int(n) or n < 0:
        raise DomainError(f"polynomial degree must be a non-negative integer, got {n}")
    return int(n)


def laguerre(n, alpha, x):
    """Generalized Laguerre polynomial L_n^alpha(x) by three-term recurrence.

    Requires alpha > -1 (integrability of the weight x^alpha e^-x).  `x` may
    be a scalar or ndarray; x >= 0 is the physical range but the recurrence
    itself is polynomial and imposes no restriction.
    """
    n = _check_degree(n)
    if alpha <= -1.0:
        raise DomainError(f"Laguerre parameter alpha must be > -1, got {alpha}")
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = 1.0 + alpha - x
    for k in range(1, n):
        p, p_prev = ((2 * k + 1 + alpha - x) * p - (k + alpha) * p_prev) / (k + 1), p
    return p if p.ndim else float(p)


def laguerre_deriv(n, alpha, x, order=1):
    """m-th derivative of L_n^alpha: d^m/dx^m L_n^a = (-1)^m L_{n-m}^{a+m}."""
    if order < 0:
        raise DomainError("derivative order must be >= 0")
    if order > n:
        return np.zeros_like(np.asarray(x, dtype=float))
    return (-1.0) ** order * laguerre(n - order, alpha + order, x)


def jacobi(n, a, b, x):
    """Jacobi polynomial P_n^{(a,b)}(x) by three-term recurrence.

    Requires a, b > -1.  The recurrence is polynomial in x and is evaluated
    for any real argument (arguments outside [-1, 1] are permitted; they occur
    when the angular eigenfunctions are evaluated with the -2cos(phi)
    argument convention).  Half-integer degrees l - 1/2 are handled upstream:
    the caller maps them to the integer recurrence degree n.
    """
    n = _check_degree(n)
    if a <= -1.0 or b <= -1.0:
        raise DomainError(f"Jacobi parameters must be > -1, got a={a}, b={b}")
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = 0.5 * (a - b) + 0.5 * (a + b + 2) * x
    for k in range(2, n + 1):
        c = 2 * k + a + b
        a1 = 2 * k * (k + a + b) * (c - 2)
        a2 = (c - 1) * (a * a - b * b)
        a3 = (c - 1) * c * (c - 2)
        a4 = 2 * (k + a - 1) * (k + b - 1) * c
        p, p_prev = ((a2 + a3 * x) * p - a4 * p_prev) / a1, p
    return p if p.ndim else float(p)


def log_gamma(x):
    """ln Gamma(x) for x > 0 (backed by the C library's Lanczos lgamma)."""
    x = float(x)
    if x <= 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def _log_ratio_sqrt(num_logs, den_logs, prefactor):
    if prefactor <= 0.0:
        raise DomainError("non-positive prefactor in normalization constant")
    return math.exp(
        0.5 * (math.log(prefactor) + sum(num_logs) - math.log(2.0) - sum(den_logs))
    )


def _check_nu(nu1, nu2):
    # weight |cos|^{2nu1}|sin|^{2nu2} must be integrable on the circle
    if nu1 <= -0.5 or nu2 <= -0.5:
        raise DomainError(f"Dunkl parameters must exceed -1/2, got ({nu1}, {nu2})")


def angular_norm_even(l, nu1, nu2):
    """Normalization constants (A_l, A'_l) of the even-sector eigenfunction.

    l is a positive integer.  Raises DomainError outside nu > -1/2 (weight
    not integrable) or if any Gamma argument is non-positive.
    """
    if l != int(l) or l < 1:
        raise DomainError(f"even sector requires integer l >= 1, got {l}")
    _check_nu(nu1, nu2)
    args = (l + nu1 + nu2, l + nu1 + 0.5, l + nu2 + 0.5)
    if any(a <= 0.0 for a in args) or 2 * l + nu1 + nu2 <= 0.0:
        raise DomainError(f"Gamma argument <= 0 in A_l for l={l}, nu=({nu1},{nu2})")
    den = (log_gamma(l + nu1 + 0.5), log_gamma(l + nu2 + 0.5))
    a_l = _log_ratio_sqrt(
        (log_gamma(l + nu1 + nu2), log_gamma(l + 1.0)), den, 2 * l + nu1 + nu2
    )
    a_lp = _log_ratio_sqrt(
        (log_gamma(l + nu1 + nu2 + 1.0), log_gamma(float(l))), den, 2 * l + nu1 + nu2
    )
    return a_l, a_lp


def _check_half_integer(l):
    if 2 * l != int(2 * l) or int(2 * l) % 2 != 1 or l < 0.5:
        raise DomainError(f"odd sector requires half-integer l >= 1/2, got {l}")


def angular_norm_odd(l, nu1, nu2):
    """Normalization constants (B_l, B'_l) of the odd-sector eigenfunction.

    l is a half-integer (1/2, 3/2, ...).  The values are the canonical ones
    fixed by unit Dunkl-weighted component norm.
    """
    _check_half_integer(l)
    _check_nu(nu1, nu2)
    args = (l + nu1 + nu2 + 0.5, l + nu1 + 1.0, l + nu2, l + nu1, l + nu2 + 1.0)
    if any(a <= 0.0 for a in args) or 2 * l + nu1 + nu2 <= 0.0:
        raise DomainError(f"Gamma argument <= 0 in B_l for l={l}, nu=({nu1},{nu2})")
    num = (log_gamma(l + nu1 + nu2 + 0.5), log_gamma(l + 0.5))
    b_l = _log_ratio_sqrt(num, (log_gamma(l + nu1 + 1.0), log_gamma(l + nu2)), 2 * l + nu1 + nu2)
    b_lp = _log_ratio_sqrt(num, (log_gamma(l + nu1), log_gamma(l + nu2 + 1.0)), 2 * l + nu1 + nu2)
    return b_l, b_lp


def angular_norm_odd_gamma_variant(l, nu1, nu2):
    """Circulating closed-form variant of (B_l, B'_l).

    Uses Gamma(l+nu1+nu2+1) in B'_l where the canonical value requires
    Gamma(l+nu1+nu2+1/2) (B_l agrees with the canonical value once the degree
    index is read as l).  Reported next to the canonical constants by
    ``dunklpauli verify``; not used to build eigenfunctions.
    """
    _check_half_integer(l)
    b_l = angular_norm_odd(l, nu1, nu2)[0]
    args = (l + nu1 + nu2 + 1.0, l + nu1, l + nu2 + 1.0)
    if any(a <= 0.0 for a in args) or 2 * l + nu1 + nu2 <= 0.0:
        raise DomainError(f"Gamma argument <= 0 in B'_l variant for l={l}")
    b_lp = _log_ratio_sqrt(
        (log_gamma(l + nu1 + nu2 + 1.0), log_gamma(l + 0.5)),
        (log_gamma(l + nu1), log_gamma(l + nu2 + 1.0)),
        2 * l + nu1 + nu2,
    )
    return b_l, b_lp


def jacobi_weighted_dot(f, g, a, b, degree):
    """Exact integral of (1-u)^a (1+u)^b f(u) g(u) over [-1, 1].

    f and g must be polynomials of degree <= `degree`; Gauss-Jacobi quadrature
    with enough nodes makes the rule exact.  This is the quadrature oracle
    behind the angular orthonormality checks.
    """
    from scipy.special import roots_jacobi

    nodes = degree + 2
    # a+b = -1 (the even-sector case) trips a guarded 0/0 inside roots_jacobi;
    # the nodes/weights are still correct to ~1e-13 (moment-checked).
    with np.errstate(invalid="ignore"):
        u, w = roots_jacobi(nodes, a, b)
    return float(np.sum(w * f(u) * g(u)))
