"""Bit-encoded spin-1/2 configurations of an L-site ring.

A configuration is an integer whose bit ``j`` is 1 when site ``j`` carries an
up spin.  Configurations with a fixed number of up spins form a sector of
fixed total magnetization; the Hamiltonian never connects two sectors.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .errors import ParameterError

L_MIN = 4
L_MAX = 24


def check_size(L):
    if not isinstance(L, (int, np.integer)) or isinstance(L, bool):
        raise ParameterError(f"L must be an integer, got {L!r}")
    if not L_MIN <= L <= L_MAX:
        raise ParameterError(f"L must lie in [{L_MIN}, {L_MAX}], got {L}")
    return int(L)


@dataclass(frozen=True, eq=False)
class BasisSector:
    """All configurations of ``L`` sites with ``n_up`` up spins.

    ``states`` is sorted ascending, so position lookup is a binary search.
    """

    L: int
    n_up: int
    states: np.ndarray = field(repr=False)

    @property
    def dim(self):
        return len(self.states)

    def __len__(self):
        return len(self.states)

    def __contains__(self, bits):
        k = np.searchsorted(self.states, bits)
        return bool(k < len(self.states) and self.states[k] == bits)

    def index_of(self, bits):
        """Position(s) of configuration(s) ``bits``; raises if absent."""
        bits = np.asarray(bits, dtype=np.int64)
        k = np.searchsorted(self.states, bits)
        kk = np.minimum(k, len(self.states) - 1)
        if np.any(self.states[kk] != bits):
            raise ParameterError("configuration not in this sector")
        return int(k) if k.ndim == 0 else k

    def site_bits(self, site):
        """Occupation (0/1) of ``site`` for every state, as an int array."""
        return (self.states >> site) & 1


def enumerate_sector(L, n_up):
    L = check_size(L)
    if not isinstance(n_up, (int, np.integer)) or not 0 <= n_up <= L:
        raise ParameterError(f"n_up must lie in [0, {L}], got {n_up!r}")
    n_up = int(n_up)
    if n_up == 0:
        states = np.zeros(1, dtype=np.int64)
    else:
        sites = np.array(list(combinations(range(L), n_up)), dtype=np.int64)
        states = np.sort(np.sum(np.left_shift(1, sites), axis=1))
    assert len(states) == comb(L, n_up)
    states.setflags(write=False)
    return BasisSector(L, n_up, states)


def all_sectors(L):
    return [enumerate_sector(L, n) for n in range(L + 1)]


def exchange_action(s, i, j, L):
    """Action of the Pauli exchange sigma_i . sigma_j on configuration ``s``.

    Returns ``(diag, flipped)``: ``diag`` is +1 for parallel spins and -1 for
    antiparallel ones; ``flipped`` is ``s`` with bits ``i`` and ``j`` swapped
    (reached with amplitude 2) or ``None`` when the spins are parallel.
    """
    for site in (i, j):
        if not 0 <= site < L:
            raise ParameterError(f"site {site} outside 0..{L - 1}")
    if i == j:
        raise ParameterError("exchange needs two distinct sites")
    if s >> L:
        raise ParameterError(f"configuration {s:#x} has bits above site {L - 1}")
    if ((s >> i) & 1) == ((s >> j) & 1):
        return 1, None
    return -1, s ^ ((1 << i) | (1 << j))
