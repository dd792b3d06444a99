"""Richardson-refined central differences (Ridders' method).

Polynomial extrapolation of central differences over a shrinking step, with
an error estimate from the extrapolation tableau.  Used by the derivative
oracles (U = -d ln Z/d beta, C_V = dU/dT) in tests and `verify`.
"""

import numpy as np

CON = 1.4
CON2 = CON * CON
NTAB = 12
SAFE = 2.0


def ridders_derivative(func, x, h=None):
    """Return (f'(x), err_estimate) by Ridders extrapolation.

    `h` is the initial step; it should be a scale over which func changes
    noticeably, not a tiny number.  Defaults to max(0.1*|x|, 0.01).
    """
    if h is None:
        h = max(0.1 * abs(x), 0.01)
    if h == 0.0:
        raise ValueError("initial step must be nonzero")
    tableau = {}
    hh = h
    tableau[0, 0] = (func(x + hh) - func(x - hh)) / (2.0 * hh)
    err = np.inf
    result = tableau[0, 0]
    for i in range(1, NTAB):
        hh /= CON
        tableau[0, i] = (func(x + hh) - func(x - hh)) / (2.0 * hh)
        fac = CON2
        for j in range(1, i + 1):
            tableau[j, i] = (tableau[j - 1, i] * fac - tableau[j - 1, i - 1]) / (fac - 1.0)
            fac *= CON2
            errt = max(
                abs(tableau[j, i] - tableau[j - 1, i]),
                abs(tableau[j, i] - tableau[j - 1, i - 1]),
            )
            if errt <= err:
                err = errt
                result = tableau[j, i]
        if abs(tableau[i, i] - tableau[i - 1, i - 1]) >= SAFE * err:
            break
    return result, err
