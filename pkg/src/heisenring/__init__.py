"""Thermal entanglement of the isotropic antiferromagnetic Heisenberg ring.

Exact diagonalization in magnetization sectors, pair concurrence from the
thermal energy, threshold temperatures, and GHZ preparation fidelities.
"""

from .eigensolver import ConvergenceError, EigenDecomposition, eigh
from .entanglement import (
    GhzSpec,
    best_neel_ghz,
    exhaustive_ghz_search,
    fidelity_threshold,
    ghz_fidelity_ground,
    ground_space,
    neel_ghz,
    thermal_ghz_fidelity,
    wootters_concurrence_oracle,
)
from .four_qubit_analytic import (
    analytic_eigensystem,
    analytic_thermal_fidelity,
    verify_against_numeric,
)
from .hamiltonian import (
    FullSpectrum,
    clear_caches,
    full_spectrum,
    ring_bonds,
    sector_eigensystem,
)
from .spin_basis import BasisState, Sector, cyclic_shift, enumerate_sector, global_flip
from .thermodynamics import (
    analytic_concurrence,
    analytic_partition_function,
    concurrence,
    ground_state_concurrence,
    internal_energy,
    log_partition_function,
    thermal_observables,
    threshold_temperature,
)

__version__ = "0.1.0"

__all__ = [
    "BasisState",
    "ConvergenceError",
    "EigenDecomposition",
    "FullSpectrum",
    "GhzSpec",
    "Sector",
    "analytic_concurrence",
    "analytic_eigensystem",
    "analytic_partition_function",
    "analytic_thermal_fidelity",
    "best_neel_ghz",
    "clear_caches",
    "concurrence",
    "cyclic_shift",
    "eigh",
    "enumerate_sector",
    "exhaustive_ghz_search",
    "fidelity_threshold",
    "full_spectrum",
    "ghz_fidelity_ground",
    "global_flip",
    "ground_space",
    "ground_state_concurrence",
    "internal_energy",
    "log_partition_function",
    "neel_ghz",
    "ring_bonds",
    "sector_eigensystem",
    "thermal_ghz_fidelity",
    "thermal_observables",
    "threshold_temperature",
    "verify_against_numeric",
    "wootters_concurrence_oracle",
]
