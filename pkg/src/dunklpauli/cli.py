"""Command-line front end.

Subcommands: spectrum, thermo, sweep, figures, verify.  Units are
hbar = c = k_B = 1 throughout; temperatures are in units of omega/k_B when
omega = 1 (the default).  Exit codes: 0 success, 1 verification failure,
2 invalid configuration.  CSV floats are written with 17 significant digits
(fixed scientific format) so identical configs produce byte-identical files;
JSON uses the shortest round-trip float representation.

The default output directory is the environment variable DUNKLPAULI_OUTDIR
(falling back to the working directory).
"""

import argparse
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from dunklpauli import spectrum as spec_mod
from dunklpauli import thermo
from dunklpauli.spectrum import ConstraintError, ModelParams, check_constraint

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_CONFIG = 2

FIGURE_THETAS = (-0.4, 0.0, 0.5, 1.0)
FIGURE_NUS = (0.0, 0.25, 0.5, 1.0)


@dataclass
class RunConfig:
    """Resolved configuration of one CLI invocation (JSON round-trippable)."""

    subcommand: str
    sector: int = 1
    nu1: float = 0.0
    nu2: float = 0.0
    theta: float = 0.0
    omega: float = 1.0
    mass: float = 1.0
    tmin: float = 0.02
    tmax: float = 10.0
    tsteps: int = 121
    cutoff: float = 20.0
    e0_mode: str = "enumerated"
    format: str = "csv"
    out: str = ""
    theta_list: list = field(default_factory=list)
    nu_list: list = field(default_factory=list)

    def to_json(self):
        return json.dumps(asdict(self), indent=1)

    @classmethod
    def from_json(cls, text):
        return cls(**json.loads(text))

    def t_grid(self):
        if self.tmin <= 0 or self.tmax <= self.tmin or self.tsteps < 2:
            raise ValueError("need 0 < tmin < tmax and tsteps >= 2")
        return np.geomspace(self.tmin, self.tmax, self.tsteps)

    def params(self):
        return ModelParams(
            nu1=self.nu1,
            nu2=self.nu2,
            epsilon=self.sector,
            theta=self.theta,
            M=self.mass,
            omega=self.omega,
        )


def _add_common(sub):
    sub.add_argument("--sector", choices=["+1", "-1", "1"], default="+1")
    sub.add_argument("--nu1", type=float, default=0.0)
    sub.add_argument("--nu2", type=float, default=0.0)
    sub.add_argument("--theta", type=float, default=0.0)
    sub.add_argument("--omega", type=float, default=1.0)
    sub.add_argument("--mass", type=float, default=1.0)
    sub.add_argument("--tmin", type=float, default=0.02, help="T grid start (log-spaced)")
    sub.add_argument("--tmax", type=float, default=10.0)
    sub.add_argument("--tsteps", type=int, default=121)
    sub.add_argument("--cutoff", type=float, default=20.0, help="energy cutoff, units of omega")
    sub.add_argument("--e0-mode", choices=list(thermo.E0_MODES), default="enumerated")
    sub.add_argument("--format", choices=["csv", "json"], default="csv")
    sub.add_argument("--out", default="", help="output path (file or directory)")
    sub.add_argument("--dump-config", default="", metavar="PATH", help="write resolved config JSON")


def build_parser():
    parser = argparse.ArgumentParser(prog="dunklpauli", description=__doc__)
    subs = parser.add_subparsers(dest="subcommand", required=True)
    for name, descr in (
        ("spectrum", "enumerate the admissible spectrum below --cutoff"),
        ("thermo", "closed-form thermodynamics on the T grid"),
        ("sweep", "thermodynamics over (nu, theta, T) grids"),
        ("figures", "emit the standard figure-family data files"),
        ("verify", "run all verification suites"),
    ):
        sub = subs.add_parser(name, help=descr)
        _add_common(sub)
        if name == "sweep":
            sub.add_argument("--theta-list", default="0.0", help="comma-separated flux values")
            sub.add_argument("--nu-list", default="0.0", help="comma-separated nu values")
        if name == "verify":
            sub.add_argument("--suite", choices=["all", "specfun", "angular", "radial", "thermo"], default="all")
            sub.add_argument(
                "--inject-energy-offset",
                type=float,
                default=0.0,
                help="testing hook: offset the radial residual energy to force a failure",
            )
    return parser


def _config_from_args(args):
    cfg = RunConfig(
        subcommand=args.subcommand,
        sector=int(args.sector),
        nu1=args.nu1,
        nu2=args.nu2,
        theta=args.theta,
        omega=args.omega,
        mass=args.mass,
        tmin=args.tmin,
        tmax=args.tmax,
        tsteps=args.tsteps,
        cutoff=args.cutoff,
        e0_mode=args.e0_mode,
        format=args.format,
        out=args.out,
    )
    if hasattr(args, "theta_list"):
        cfg.theta_list = [float(x) for x in str(args.theta_list).split(",") if x != ""]
        cfg.nu_list = [float(x) for x in str(args.nu_list).split(",") if x != ""]
    return cfg


def _outdir():
    return Path(os.environ.get("DUNKLPAULI_OUTDIR", "."))


def _resolve_out(cfg, default_name):
    if cfg.out:
        path = Path(cfg.out)
        if path.is_dir():
            return path / default_name
        return path
    return _outdir() / default_name


def _fmt(x):
    return f"{x:.16e}"


def _write_table_csv(path, header, rows):
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for name in header:
            v = row[name]
            cells.append(_fmt(v) if isinstance(v, float) else str(v))
        lines.append(",".join(cells))
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text("\n".join(lines) + "\n")


def _cmd_spectrum(cfg):
    p = cfg.params()
    table = spec_mod.enumerate_states(p, cfg.cutoff * cfg.omega)
    out = _resolve_out(cfg, f"spectrum.{cfg.format}")
    Path(out).parent.mkdir(parents=True, exist_ok=True)
    if cfg.format == "csv":
        table.to_csv(out)
    else:
        table.to_json(out)
    print(f"wrote {len(table.rows)} states to {out}")
    return EXIT_OK


def _nu_of(cfg):
    # single-nu convention of the thermo sweeps: nu = nu1 (nu2 follows the sector)
    return cfg.nu1


def _cmd_thermo(cfg):
    res = thermo.sweep(
        cfg.sector,
        [_nu_of(cfg)],
        [cfg.theta],
        list(cfg.t_grid()),
        e0_mode=cfg.e0_mode,
        M=cfg.mass,
        omega=cfg.omega,
    )
    out = _resolve_out(cfg, f"thermo.{cfg.format}")
    Path(out).parent.mkdir(parents=True, exist_ok=True)
    if cfg.format == "csv":
        res.to_csv(out)
    else:
        res.to_json(out)
    print(f"wrote {len(res.rows)} points to {out}")
    return EXIT_OK


def _cmd_sweep(cfg):
    res = thermo.sweep(
        cfg.sector,
        cfg.nu_list or [0.0],
        cfg.theta_list or [0.0],
        list(cfg.t_grid()),
        e0_mode=cfg.e0_mode,
        M=cfg.mass,
        omega=cfg.omega,
    )
    out = _resolve_out(cfg, f"sweep.{cfg.format}")
    Path(out).parent.mkdir(parents=True, exist_ok=True)
    if cfg.format == "csv":
        res.to_csv(out)
    else:
        res.to_json(out)
    print(f"wrote {len(res.rows)} points to {out}")
    return EXIT_OK


def _figure_columns(quantity, sector, nus, thetas, t_grid, e0_mode, M, omega):
    cols = {"T": list(t_grid)}
    for nu in nus:
        for theta in thetas:
            p = thermo._params_for(sector, nu, theta, M, omega)
            key = f"{quantity}_nu{nu:g}_theta{theta:g}" if len(nus) > 1 else f"{quantity}_theta{theta:g}"
            fn = {
                "Z": thermo.partition_closed,
                "U": thermo.internal_energy,
                "S": thermo.entropy,
                "C_V": thermo.heat_capacity,
            }[quantity]
            cols[key] = [fn(p, T, e0_mode) for T in t_grid]
    return cols


def _write_columns_csv(path, cols):
    header = list(cols)
    n = len(cols[header[0]])
    lines = [",".join(header)]
    for i in range(n):
        lines.append(",".join(_fmt(float(cols[k][i])) for k in header))
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text("\n".join(lines) + "\n")


def _cmd_figures(cfg):
    t_grid = cfg.t_grid()
    outdir = Path(cfg.out) if cfg.out else _outdir()
    outdir.mkdir(parents=True, exist_ok=True)
    made = []
    jobs = (
        ("fig_partition_even.csv", "Z", 1, [0.3], FIGURE_THETAS),
        ("fig_partition_odd.csv", "Z", -1, FIGURE_NUS, FIGURE_THETAS),
        ("fig_internal_energy_even.csv", "U", 1, [0.3], FIGURE_THETAS),
        ("fig_internal_energy_odd.csv", "U", -1, FIGURE_NUS, FIGURE_THETAS),
        ("fig_entropy_even.csv", "S", 1, [0.3], FIGURE_THETAS),
        ("fig_entropy_odd.csv", "S", -1, [0.25], FIGURE_THETAS),
        ("fig_heat_capacity.csv", "C_V", 1, [0.3], FIGURE_THETAS),
    )
    for name, quantity, sector, nus, thetas in jobs:
        cols = _figure_columns(
            quantity, sector, nus, thetas, t_grid, cfg.e0_mode, cfg.mass, cfg.omega
        )
        path = outdir / name
        _write_columns_csv(path, cols)
        made.append(str(path))
    print("\n".join(made))
    return EXIT_OK


def _cmd_verify(cfg, suite, energy_offset):
    from dunklpauli import verify as verify_mod

    outdir = Path(cfg.out) if cfg.out else _outdir()
    outdir.mkdir(parents=True, exist_ok=True)
    rows = []
    angular_table = radial_table = None
    if suite in ("all", "specfun"):
        rows += verify_mod.verify_specfun()
    if suite in ("all", "angular"):
        a_rows, angular_table = verify_mod.verify_angular()
        rows += a_rows
    if suite in ("all", "radial"):
        r_rows, radial_table = verify_mod.verify_radial(energy_offset=energy_offset)
        rows += r_rows
    if suite in ("all", "thermo"):
        rows += verify_mod.verify_thermo()
    if suite == "all":
        rows += verify_mod.verify_e0()

    report_path = outdir / "verify_report.csv"
    lines = ["suite,check,status,detail"]
    for r in rows:
        detail = r["detail"].replace(",", ";")
        lines.append(f"{r['suite']},{r['check']},{r['status']},{detail}")
    report_path.write_text("\n".join(lines) + "\n")
    if angular_table is not None:
        _write_table_csv(
            outdir / "verify_angular.csv",
            ["l", "sector", "branch", "eigenvalue_error", "norm_error"],
            angular_table,
        )
    if radial_table is not None:
        _write_table_csv(
            outdir / "verify_radial.csv",
            ["K_plus", "n", "E_analytic", "E_numeric", "abs_error"],
            radial_table,
        )

    width = max(len(r["check"]) for r in rows) + 2
    for r in rows:
        print(f"[{r['status']:<4}] {r['suite']:<8} {r['check']:<{width}} {r['detail']}")
    failed = [r for r in rows if r["status"] == "FAIL"]
    print(
        f"{len(rows)} checks: {len(failed)} failed "
        f"({sum(1 for r in rows if r['status'] == 'INFO')} informational); report -> {report_path}"
    )
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        if args.dump_config:
            Path(args.dump_config).parent.mkdir(parents=True, exist_ok=True)
            Path(args.dump_config).write_text(cfg.to_json())
        p = cfg.params()  # validates nu/M/omega ranges
        if cfg.subcommand in ("spectrum", "thermo", "sweep", "figures"):
            ok, diag = check_constraint(p)
            if not ok and cfg.subcommand in ("spectrum", "thermo"):
                print(f"invalid configuration: {diag}", file=sys.stderr)
                return EXIT_BAD_CONFIG
        if cfg.subcommand == "spectrum":
            return _cmd_spectrum(cfg)
        if cfg.subcommand == "thermo":
            return _cmd_thermo(cfg)
        if cfg.subcommand == "sweep":
            return _cmd_sweep(cfg)
        if cfg.subcommand == "figures":
            return _cmd_figures(cfg)
        if cfg.subcommand == "verify":
            return _cmd_verify(cfg, args.suite, args.inject_energy_offset)
        raise AssertionError(f"unhandled subcommand {cfg.subcommand}")
    except (ConstraintError, ValueError) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except OSError as exc:
        print(f"I/O error ({getattr(exc, 'filename', '?')}): {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG


if __name__ == "__main__":
    sys.exit(main())
