"""Sector-restricted sparse matrix of the J1-J2 Heisenberg ring.

    H(J) = sum_j [ sigma_j . sigma_{j+1} + J sigma_j . sigma_{j+2} ]

with periodic indices.  In the z basis a Pauli exchange contributes +1 on
the diagonal for parallel spins, -1 for antiparallel ones, and 2 between an
antiparallel configuration and its pair-flipped partner.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .basis import BasisSector
from .errors import ParameterError


def bonds(L, J):
    """(i, j, coupling) for every bond, nearest first then next-nearest.

    Not deduplicated: at L = 4 each next-nearest pair appears twice.
    """
    out = [(j, (j + 1) % L, 1.0) for j in range(L)]
    out += [(j, (j + 2) % L, float(J)) for j in range(L)]
    return out


@dataclass(frozen=True, eq=False)
class SparseHamiltonian:
    L: int
    J: float
    sector: BasisSector = field(repr=False)
    diag: np.ndarray = field(repr=False)
    matrix: sp.csr_matrix = field(repr=False)

    @property
    def dim(self):
        return self.sector.dim

    @property
    def offdiag(self):
        """Strictly off-diagonal part as CSR."""
        return self.matrix - sp.diags(self.diag, format="csr")

    def toarray(self):
        return self.matrix.toarray()


def build(L, J, sector):
    if sector.L != L:
        raise ParameterError(f"sector was enumerated for L={sector.L}, not L={L}")
    states = sector.states
    dim = sector.dim
    diag = np.zeros(dim)
    rows, cols, vals = [], [], []
    for i, j, c in bonds(L, J):
        anti = ((states >> i) & 1) != ((states >> j) & 1)
        diag += c * np.where(anti, -1.0, 1.0)
        if c == 0.0:
            continue
        src = np.nonzero(anti)[0]
        dst = sector.index_of(states[src] ^ ((1 << i) | (1 << j)))
        rows.append(src)
        cols.append(dst)
        vals.append(np.full(len(src), 2.0 * c))
    rows = np.concatenate(rows + [np.arange(dim)])
    cols = np.concatenate(cols + [np.arange(dim)])
    vals = np.concatenate(vals + [diag])
    # duplicate (row, col) pairs are summed here
    matrix = sp.csr_matrix((vals, (rows, cols)), shape=(dim, dim))
    matrix.sort_indices()
    diag.setflags(write=False)
    return SparseHamiltonian(int(L), float(J), sector, diag, matrix)


def apply(H, v):
    v = np.asarray(v, dtype=float)
    if v.shape[0] != H.dim:
        raise ParameterError(f"vector length {v.shape[0]} != sector dimension {H.dim}")
    return H.matrix @ v
