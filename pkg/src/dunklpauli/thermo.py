"""Canonical thermodynamics of the Dunkl-Pauli oscillator (k_B = 1).

Closed forms, with beta = 1/T and E0 the sector ground-state offset:

    Z   = 2 e^{-beta E0} cosh(beta w theta) / (1 - e^{-2 beta w})^2
    F   = -ln Z / beta
    U   = E0 - w theta tanh(beta w theta) + 4 w / (e^{2 beta w} - 1)
    S   = ln[2 cosh(beta w theta)] - 2 ln(1 - e^{-2 beta w})
          - beta w theta tanh(beta w theta) + 4 beta w / (e^{2 beta w} - 1)
    C_V = (beta w)^2 [theta^2 sech^2(beta w theta) + 2 csch^2(beta w)]

(The oscillator terms of U and S carry "+": U = -d ln Z / d beta of the Z
above; a "-" would flip the equipartition slope to -2 and break S >= 0 and
C_V = dU/dT.)  E0 cancels out of S and C_V, which therefore depend on
neither the sector nor nu.

Ground-state offset conventions (`e0_mode`):

    "paper"       E0 = w (1 + 2 l0)          (eps = +1)
                  E0 = 2 w (l0 + nu + 3/2)   (eps = -1)
    "enumerated"  E0 = min over admissible states of (E + w theta m_s),
                  i.e. the offset that makes Z above reproduce the exact
                  Boltzmann sum.

For eps = +1 the two agree exactly; for eps = -1 they differ by exactly w
(the closed-form table sits one oscillator quantum above the spectrum the
energy formula actually generates).  `verify` prints both; the Boltzmann-sum
oracles use "enumerated".

All exponentials go through expm1/log1p so S and C_V keep relative accuracy
down to the 1e-16 scale at beta*w up to ~50.
"""

import math
from dataclasses import dataclass, field

from dunklpauli.spectrum import (
    ConstraintError,
    EmptySpectrumError,
    ModelParams,
    check_constraint,
    lowest_l,
    tower_energies,
)

__all__ = [
    "CutoffError",
    "ThermoPoint",
    "SweepResult",
    "SchottkyResult",
    "E0_MODES",
    "ground_energy",
    "log_partition_closed",
    "partition_closed",
    "partition_sum",
    "choose_cutoff",
    "free_energy",
    "internal_energy",
    "entropy",
    "heat_capacity",
    "thermo_point",
    "thermo_point_from_sum",
    "schottky_peak",
    "limit_report",
    "sweep",
]

E0_MODES = ("paper", "enumerated")


class CutoffError(ValueError):
    """Spectral-sum cutoff too small for the certified tail requirement."""


def _require(p: ModelParams):
    ok, diag = check_constraint(p)
    if not ok:
        raise ConstraintError(diag)


def _check_T(T):
    if T <= 0.0:
        raise ValueError(f"temperature must be positive, got {T}")


def _ln_2cosh(x):
    ax = abs(x)
    return ax + math.log1p(math.exp(-2.0 * ax))


def _sech(x):
    e = math.exp(-abs(x))
    return 2.0 * e / (1.0 + e * e)


def _csch(y):
    # 2 e^{-|y|} / (1 - e^{-2|y|}) with the denominator through expm1,
    # keeping full relative accuracy down to |y| ~ 1e-8
    return math.copysign(2.0 * math.exp(-abs(y)) / -math.expm1(-2.0 * abs(y)), y)


def ground_energy(p: ModelParams, mode="enumerated"):
    """Ground-state offset E0 of the closed-form partition function."""
    _require(p)
    if mode not in E0_MODES:
        raise ValueError(f"e0_mode must be one of {E0_MODES}, got {mode!r}")
    w = p.omega
    if mode == "paper":
        l0 = lowest_l(p, 1).l0
        if p.epsilon == 1:
            return w * (1.0 + 2.0 * l0)
        return 2.0 * w * (l0 + p.nu_bar + 1.5)
    cutoff = w * (8.0 + 2.0 * abs(p.theta) + 2.0 * max(0.0, p.nu1 + p.nu2))
    for _ in range(40):
        towers = tower_energies(p, cutoff)
        if {m for _, m, *_ in towers} == {1, -1}:
            break
        cutoff *= 2.0
    else:
        raise EmptySpectrumError("no admissible towers found for either spin")
    return min(e0 + w * p.theta * m_s for _, m_s, _, _, e0 in towers)


def log_partition_closed(p: ModelParams, T, e0_mode="enumerated"):
    """ln Z of the closed form, assembled in log space."""
    _check_T(T)
    beta = 1.0 / T
    e0 = ground_energy(p, e0_mode)
    bw = beta * p.omega
    return -beta * e0 + _ln_2cosh(bw * p.theta) - 2.0 * math.log1p(-math.exp(-2.0 * bw))


def partition_closed(p: ModelParams, T, e0_mode="enumerated"):
    return math.exp(log_partition_closed(p, T, e0_mode))


def _first_admissible_l(p: ModelParams, m_s):
    from dunklpauli.spectrum import k_minus_general

    l = 1.0 if p.epsilon == 1 else 0.5
    for _ in range(10000):
        if k_minus_general(p, l) - p.theta * m_s > -1.0:
            return l
        l += 1.0
    raise EmptySpectrumError("no admissible angular momentum found")


def partition_sum(p: ModelParams, beta, cutoff, rel_tol=1e-12, raise_on_tail=True):
    """Boltzmann sum over enumerated states, with a certified geometric tail.

    Returns (partial_sum, tail).  The tail is exact for this spectrum (it is
    a sum of geometric series in n and in l); if it exceeds rel_tol times the
    partial sum a CutoffError is raised unless raise_on_tail is False.
    """
    import numpy as np

    _require(p)
    if beta <= 0.0:
        raise ValueError("beta must be positive")
    w = p.omega
    q = math.exp(-2.0 * beta * w)
    towers = tower_energies(p, cutoff)
    if not towers:
        raise EmptySpectrumError(f"no admissible tower below cutoff {cutoff:g}")
    partial = 0.0
    tail = 0.0
    last_l = {1: None, -1: None}
    for l, m_s, _, _, e0 in towers:
        n_max = int(math.floor((cutoff - e0) / (2.0 * w)))
        terms = np.exp(-beta * (e0 + 2.0 * w * np.arange(n_max + 1)))
        partial += float(terms.sum())
        tail += math.exp(-beta * (e0 + 2.0 * w * (n_max + 1))) / (1.0 - q)
        if last_l[m_s] is None or l > last_l[m_s]:
            last_l[m_s] = l
    from dunklpauli.spectrum import k_minus_general

    for m_s in (1, -1):
        l_next = _first_admissible_l(p, m_s) if last_l[m_s] is None else last_l[m_s] + 1.0
        e0_next = w * (k_minus_general(p, l_next) - p.theta * m_s + 1.0)
        tail += math.exp(-beta * e0_next) / (1.0 - q) ** 2
    if raise_on_tail and tail > rel_tol * partial:
        raise CutoffError(
            f"cutoff {cutoff:g} too small: certified tail {tail:.3e} exceeds "
            f"{rel_tol:g} x partial sum {partial:.6e}"
        )
    return partial, tail


def choose_cutoff(p: ModelParams, beta, rel_tol=1e-12, floor=0.0):
    """Smallest convenient cutoff meeting the certified-tail requirement."""
    _require(p)
    w = p.omega
    e_ground = ground_energy(p, "enumerated") - w * abs(p.theta)
    cutoff = max(floor, e_ground + (math.log(1.0 / rel_tol) + 12.0) / beta)
    for _ in range(60):
        partial, tail = partition_sum(p, beta, cutoff, rel_tol, raise_on_tail=False)
        if tail <= rel_tol * partial:
            return cutoff
        cutoff *= 1.4
    raise CutoffError("could not satisfy the tail requirement")


def free_energy(p: ModelParams, T, e0_mode="enumerated"):
    """F = -ln Z / beta."""
    return -T * log_partition_closed(p, T, e0_mode)


def internal_energy(p: ModelParams, T, e0_mode="enumerated"):
    """U = -d ln Z / d beta, in closed form."""
    _check_T(T)
    beta = 1.0 / T
    w = p.omega
    e0 = ground_energy(p, e0_mode)
    return e0 - w * p.theta * math.tanh(beta * w * p.theta) + 4.0 * w / math.expm1(
        2.0 * beta * w
    )


def _entropy_flux(x):
    # ln(2cosh x) - x tanh x, rewritten to survive x >> 1
    ax = abs(x)
    return math.log1p(math.exp(-2.0 * ax)) + 2.0 * ax / (math.exp(2.0 * ax) + 1.0)


def _entropy_osc(y):
    return -2.0 * math.log1p(-math.exp(-2.0 * y)) + 4.0 * y / math.expm1(2.0 * y)


def entropy(p: ModelParams, T, e0_mode="enumerated"):
    """S = beta (U - F); E0 cancels, so S is sector- and nu-independent.

    At theta = 0 the spin doublet stays degenerate and S(T -> 0) -> ln 2
    instead of 0; for theta != 0 the flux gap freezes the doublet and the
    third law holds.
    """
    _check_T(T)
    _require(p)
    beta = 1.0 / T
    bw = beta * p.omega
    return _entropy_flux(bw * p.theta) + _entropy_osc(bw)


def heat_capacity(p: ModelParams, T, e0_mode="enumerated"):
    """C_V = dU/dT = (bw)^2 [theta^2 sech^2(bw theta) + 2 csch^2(bw)]."""
    _check_T(T)
    _require(p)
    bw = p.omega / T
    return bw * bw * (
        p.theta * p.theta * _sech(bw * p.theta) ** 2 + 2.0 * _csch(bw) ** 2
    )


@dataclass(frozen=True)
class ThermoPoint:
    """One temperature point with provenance of the numbers."""

    T: float
    Z: float
    F: float
    U: float
    S: float
    C_V: float
    provenance: str = "closed_form"


def thermo_point(p: ModelParams, T, e0_mode="enumerated"):
    return ThermoPoint(
        T=T,
        Z=partition_closed(p, T, e0_mode),
        F=free_energy(p, T, e0_mode),
        U=internal_energy(p, T, e0_mode),
        S=entropy(p, T, e0_mode),
        C_V=heat_capacity(p, T, e0_mode),
        provenance="closed_form",
    )


def thermo_point_from_sum(p: ModelParams, T, rel_tol=1e-12):
    """ThermoPoint built from the Boltzmann-sum oracle (no closed forms).

    Z and U are energy-weighted sums over the enumerated spectrum, S comes
    from beta (U - F), and C_V from a central difference of the summed U.
    """
    import numpy as np

    _check_T(T)

    def u_of_beta(beta):
        cutoff = choose_cutoff(p, beta, rel_tol)
        towers = tower_energies(p, cutoff)
        w = p.omega
        es = []
        for _, _, _, _, e0 in towers:
            n_max = int(math.floor((cutoff - e0) / (2.0 * w)))
            es.append(e0 + 2.0 * w * np.arange(n_max + 1))
        es = np.concatenate(es)
        weights = np.exp(-beta * es)
        z = float(weights.sum())
        return z, float((es * weights).sum() / z)

    beta = 1.0 / T
    z, u = u_of_beta(beta)
    f = -math.log(z) / beta
    s = beta * (u - f)
    db = 1e-5 * beta
    _, u_hi = u_of_beta(beta + db)
    _, u_lo = u_of_beta(beta - db)
    c_v = -(beta * beta) * (u_hi - u_lo) / (2.0 * db)
    return ThermoPoint(T=T, Z=z, F=f, U=u, S=s, C_V=c_v, provenance="spectral_sum")


def _golden_max(f, lo, hi, tol):
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    # parabolic polish: comparison search alone is sqrt(eps)-limited at the top
    delta = max(1e-6 * x, 1e-9)
    f0, fp, fm = f(x), f(x + delta), f(x - delta)
    denom = fp - 2.0 * f0 + fm
    if denom < 0.0:
        x = x - 0.5 * delta * (fp - fm) / denom
    return x, f(x)


@dataclass(frozen=True)
class SchottkyResult:
    flux_T_peak: float | None
    flux_C_peak: float | None
    total_T_peak: float | None
    total_C_peak: float | None
    note: str = ""


def schottky_peak(p: ModelParams, t_range=None):
    """Peak of the flux (Schottky) term of C_V, plus any interior total peak.

    The flux term (w theta/T)^2 sech^2(w theta/T) peaks where x tanh x = 1
    with x = beta w theta.  With theta = 0 the term vanishes identically and
    a no-interior-peak result is returned (that is a result, not an error).
    """
    import numpy as np

    _require(p)
    w = p.omega
    lo, hi = t_range if t_range is not None else (1e-3 * w, 1e3 * w)

    def flux_term(T):
        x = w * p.theta / T
        return x * x * _sech(x) ** 2

    def total(T):
        return heat_capacity(p, T)

    if p.theta == 0.0:
        return SchottkyResult(None, None, None, None, "flux term vanishes at theta = 0")

    t_flux, c_flux = _golden_max(flux_term, lo, hi, 1e-10)

    t_grid = np.geomspace(lo, hi, 2048)
    c_grid = np.array([total(t) for t in t_grid])
    i = int(np.argmax(c_grid))
    if i == 0 or i == t_grid.size - 1:
        return SchottkyResult(
            t_flux, c_flux, None, None, "total C_V monotone on the range"
        )
    t_tot, c_tot = _golden_max(total, t_grid[i - 1], t_grid[i + 1], 1e-10)
    return SchottkyResult(t_flux, c_flux, t_tot, c_tot, "")


def limit_report(p: ModelParams, e0_mode="enumerated"):
    """Low- and high-temperature asymptotics, tabulated.

    Rows: (regime, quantity, beta*omega, value, deviation); deviations are
    relative for Z and absolute for U and S.  Low-T rows compare Z against
    the ground-form 2 e^{-beta E0} cosh(beta w theta) and U against
    E0 - w|theta|; high-T rows compare Z against the classical 1/(2 (bw)^2).
    """
    _require(p)
    w = p.omega
    e0 = ground_energy(p, e0_mode)
    rows = []
    for bw in (5.0, 10.0, 20.0):
        T = w / bw
        lnz = log_partition_closed(p, T, e0_mode)
        ln_ground = -e0 / T + _ln_2cosh(bw * p.theta)
        rows.append(
            {
                "regime": "low_T",
                "quantity": "Z_vs_ground_form",
                "beta_omega": bw,
                "value": lnz,
                "deviation": abs(math.expm1(ln_ground - lnz)),
            }
        )
        rows.append(
            {
                "regime": "low_T",
                "quantity": "U_minus_(E0-w|theta|)",
                "beta_omega": bw,
                "value": internal_energy(p, T, e0_mode),
                "deviation": abs(internal_energy(p, T, e0_mode) - (e0 - w * abs(p.theta))),
            }
        )
        rows.append(
            {
                "regime": "low_T",
                "quantity": "S",
                "beta_omega": bw,
                "value": entropy(p, T),
                "deviation": entropy(p, T),
            }
        )
    for bw in (0.1, 0.05, 0.02):
        T = w / bw
        z = partition_closed(p, T, e0_mode)
        z_cl = 1.0 / (2.0 * bw * bw)
        rows.append(
            {
                "regime": "high_T",
                "quantity": "Z_vs_classical",
                "beta_omega": bw,
                "value": z,
                "deviation": abs(z - z_cl) / z_cl,
            }
        )
    return rows


@dataclass
class SweepResult:
    """Grid of closed-form thermo points over (T, theta, nu)."""

    sector: int
    e0_mode: str
    t_grid: list
    theta_values: list
    nu_values: list
    rows: list = field(default_factory=list)

    def to_csv(self, path_or_buf):
        header = "sector,nu,theta,T,Z,F,U,S,C_V,e0_mode"
        lines = [header]
        for r in self.rows:
            lines.append(
                f"{r['sector']},{r['nu']:.16e},{r['theta']:.16e},{r['T']:.16e},"
                f"{r['Z']:.16e},{r['F']:.16e},{r['U']:.16e},{r['S']:.16e},"
                f"{r['C_V']:.16e},{r['e0_mode']}"
            )
        text = "\n".join(lines) + "\n"
        if isinstance(path_or_buf, (str, bytes)) or hasattr(path_or_buf, "__fspath__"):
            with open(path_or_buf, "w") as fh:
                fh.write(text)
        else:
            path_or_buf.write(text)
        return text

    def to_json(self, path=None):
        import json

        payload = {
            "schema_version": 1,
            "sector": self.sector,
            "e0_mode": self.e0_mode,
            "t_grid": list(self.t_grid),
            "theta_values": list(self.theta_values),
            "nu_values": list(self.nu_values),
            "rows": self.rows,
        }
        if path is None:
            return json.dumps(payload, indent=1)
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=1)
        return None


def _params_for(sector, nu, theta, M, omega):
    if sector == 1:
        return ModelParams(nu1=nu, nu2=-nu, epsilon=1, theta=theta, M=M, omega=omega)
    return ModelParams(nu1=nu, nu2=nu, epsilon=-1, theta=theta, M=M, omega=omega)


def sweep(sector, nu_values, theta_values, t_grid, e0_mode="enumerated", M=1.0, omega=1.0):
    """Closed-form thermodynamics over the (nu, theta, T) grid.

    `nu` means nu1 with nu2 = -nu1 for eps = +1 (the flux constraint) and
    nu1 = nu2 = nu for eps = -1.  Grids must be strictly increasing in T.
    """
    t_grid = list(t_grid)
    if any(b <= a for a, b in zip(t_grid, t_grid[1:])):
        raise ValueError("temperature grid must be strictly increasing")
    if not t_grid or not list(nu_values) or not list(theta_values):
        raise ValueError("sweep grids must be non-empty")
    result = SweepResult(
        sector=sector,
        e0_mode=e0_mode,
        t_grid=t_grid,
        theta_values=list(theta_values),
        nu_values=list(nu_values),
    )
    for nu in nu_values:
        for theta in theta_values:
            p = _params_for(sector, nu, theta, M, omega)
            for T in t_grid:
                pt = thermo_point(p, T, e0_mode)
                result.rows.append(
                    {
                        "sector": sector,
                        "nu": nu,
                        "theta": theta,
                        "T": T,
                        "Z": pt.Z,
                        "F": pt.F,
                        "U": pt.U,
                        "S": pt.S,
                        "C_V": pt.C_V,
                        "e0_mode": e0_mode,
                    }
                )
    return result
