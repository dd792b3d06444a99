"""Dunkl-deformed Pauli oscillator in an Aharonov-Bohm flux.

Exactly solvable spectrum, angular/radial eigenfunctions, and canonical
thermodynamics, each cross-checked by independent numerical oracles
(Boltzmann sums, quadrature, finite differences, and a discretized radial
eigensolver).  `dunklpauli.kernel_backend()` reports whether the compiled
Sturm-bisection kernel or the numpy fallback is active.
"""

from dunklpauli._backend import BACKEND as _KERNEL_BACKEND
from dunklpauli.spectrum import (
    ModelParams,
    QuantumState,
    SpectrumTable,
    check_constraint,
    energy,
    enumerate_states,
    lambda_eps,
    lowest_l,
)
from dunklpauli.thermo import (
    ThermoPoint,
    SweepResult,
    entropy,
    free_energy,
    ground_energy,
    heat_capacity,
    internal_energy,
    partition_closed,
    partition_sum,
    schottky_peak,
    sweep,
    thermo_point,
)

__version__ = "0.1.0"

__all__ = [
    "ModelParams",
    "QuantumState",
    "SpectrumTable",
    "check_constraint",
    "energy",
    "enumerate_states",
    "lambda_eps",
    "lowest_l",
    "ThermoPoint",
    "SweepResult",
    "entropy",
    "free_energy",
    "ground_energy",
    "heat_capacity",
    "internal_energy",
    "partition_closed",
    "partition_sum",
    "schottky_peak",
    "sweep",
    "thermo_point",
    "kernel_backend",
]


def kernel_backend():
    """Name of the active Sturm-bisection backend: 'compiled' or 'python'."""
    return _KERNEL_BACKEND
