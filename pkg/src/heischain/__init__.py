"""Exact diagonalization of the J1-J2 Pauli Heisenberg ring and its pairwise concurrence."""

__version__ = "0.1.0"

from .basis import BasisSector, enumerate_sector, exchange_action
from .eigen import full_spectrum, ground_multiplet, ground_space
from .entanglement import (
    concurrence_su2, concurrence_wootters, concurrence_x, mg_concurrence, mg_concurrence_exact,
)
from .hamiltonian import SparseHamiltonian, apply, build
from .observables import (
    EnsembleSpec, PairDensityMatrix, correlation_zz, correlations, g1_from_energy,
    g2_from_partition, g2_ground_hellmann, reduce_pair,
)
from .scan import ground_scan, thermal_grid, threshold_curve, threshold_temperature
