#!/usr/bin/env python3
"""Benchmark the compiled Sturm-bisection kernel against the numpy fallback.

The workload is the acceptance-grade radial eigensolve: lowest 4 levels of
the discretized operator at h = 1e-3 (11999 interior nodes) for each
K+ in {0.5, 2, 3.5, 6}.  Run after `pip install -e . --no-build-isolation`:

    python benchmarks/bench_kernels.py [--h 1e-3] [--repeats 3]
"""

import argparse
import importlib
import os
import sys
import time

import numpy as np


def run_workload(h):
    from dunklpauli.radial import RadialGrid, fd_eigensolve

    grid = RadialGrid.uniform(h, 12.0)
    worst = 0.0
    for k_plus in (0.5, 2.0, 3.5, 6.0):
        levels = fd_eigensolve(k_plus, 1.0, 1.0, grid, 4)
        for n, e in enumerate(levels):
            worst = max(worst, abs(e - (2 * n + k_plus + 1.0)))
    return worst


def time_backend(force_py, h, repeats):
    # re-import with the backend forced, in this process
    os.environ.pop("DUNKLPAULI_FORCE_PY", None)
    if force_py:
        os.environ["DUNKLPAULI_FORCE_PY"] = "1"
    for name in [m for m in list(sys.modules) if m.startswith("dunklpauli")]:
        del sys.modules[name]
    import dunklpauli

    importlib.import_module("dunklpauli.radial")
    times = []
    worst = 0.0
    for _ in range(repeats):
        t0 = time.perf_counter()
        worst = run_workload(h)
        times.append(time.perf_counter() - t0)
    return dunklpauli.kernel_backend(), min(times), worst


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--h", type=float, default=1e-3)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    rows = []
    for force_py in (False, True):
        backend, best, worst = time_backend(force_py, args.h, args.repeats)
        rows.append((backend, best, worst))
        if not force_py and backend == "python":
            print("note: compiled kernel unavailable; both rows use the fallback")

    print(f"\nworkload: 4 eigensolves, n=4 levels, h={args.h:g}, best of {args.repeats}")
    print(f"{'backend':<10} {'time [s]':>10} {'max |dE| [w]':>14}")
    for backend, best, worst in rows:
        print(f"{backend:<10} {best:>10.3f} {worst:>14.2e}")
    if rows[0][0] == "compiled" and rows[1][1] > 0:
        print(f"\nspeedup: {rows[1][1] / rows[0][1]:.1f}x")


if __name__ == "__main__":
    main()
