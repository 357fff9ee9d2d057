"""Brute-force references for tests and ``validate``.

Everything here works in the full 2^L space with Pauli tensor products and
literal partial traces; none of it is used by the production paths.
"""

from dataclasses import dataclass, field
from functools import reduce

import numpy as np
import scipy.sparse as sp
from scipy.special import logsumexp

from .basis import check_size
from .errors import ResourceError
from .observables import PairDensityMatrix

MAX_L = 10

# single-site operators in the (bit 0, bit 1) = (down, up) basis
_I = np.eye(2)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, 1j], [-1j, 0]])
_Z = np.diag([-1.0, 1.0]).astype(complex)


def site_operator(op, site, L):
    # kron order runs from the most significant bit (site L-1) down to site 0
    factors = [sp.csr_matrix(op if k == site else _I) for k in range(L - 1, -1, -1)]
    return reduce(lambda a, b: sp.kron(a, b, format="csr"), factors)


def exchange(i, j, L):
    return sum(site_operator(P, i, L) @ site_operator(P, j, L) for P in (_X, _Y, _Z))


@dataclass(frozen=True, eq=False)
class DenseSystem:
    L: int
    J: float
    H: np.ndarray = field(repr=False)
    eigenvalues: np.ndarray = field(repr=False)
    eigenvectors: np.ndarray = field(repr=False)


def dense_hamiltonian(L, J):
    L = check_size(L)
    if L > MAX_L:
        raise ResourceError(f"dense oracle is capped at L={MAX_L}")
    H = sp.csr_matrix((2 ** L, 2 ** L), dtype=complex)
    for j in range(L):
        H = H + exchange(j, (j + 1) % L, L) + J * exchange(j, (j + 2) % L, L)
    H = H.toarray()
    assert np.abs(H.imag).max() < 1e-12
    return H.real


def dense_build(L, J):
    H = dense_hamiltonian(L, J)
    evals, evecs = np.linalg.eigh(H)
    return DenseSystem(L, float(J), H, evals, evecs)


def ensemble_weights(system, ensemble, degeneracy_tol=1e-8):
    E = system.eigenvalues
    if ensemble.kind == "ground":
        w = (E <= E[0] + degeneracy_tol).astype(float)
        return w / w.sum()
    x = -E / ensemble.T
    return np.exp(x - logsumexp(x))


def density_matrix(system, ensemble):
    w = ensemble_weights(system, ensemble)
    V = system.eigenvectors
    return (V * w) @ V.T


def partial_trace_pair(rho, L, i, j):
    """Reduce a full 2^L x 2^L density matrix to sites (i, j).

    Output basis is |b_i b_j> with b the bit value, ordered 00, 01, 10, 11.
    """
    t = rho.reshape((2,) * (2 * L))
    ax_i, ax_j = L - 1 - i, L - 1 - j
    keep = [ax_i, ax_j]
    rest = [a for a in range(L) if a not in keep]
    t = np.transpose(t, keep + rest + [L + a for a in keep] + [L + a for a in rest])
    d = 2 ** (L - 2)
    t = t.reshape(4, d, 4, d)
    return np.einsum("arbr->ab", t)


def pure_pair_rdm(psi, L, i, j):
    """Reduced state of sites (i, j) for a full-space pure state ``psi``."""
    t = np.asarray(psi).reshape((2,) * L)
    ax_i, ax_j = L - 1 - i, L - 1 - j
    rest = [a for a in range(L) if a not in (ax_i, ax_j)]
    m = np.transpose(t, [ax_i, ax_j] + rest).reshape(4, -1)
    return m @ m.conj().T


def dense_pair_rdm(system, ensemble, i, j):
    rho = partial_trace_pair(density_matrix(system, ensemble), system.L, i, j)
    return PairDensityMatrix.from_matrix(rho)


def sector_to_full(sector, v):
    psi = np.zeros(2 ** sector.L, dtype=np.asarray(v).dtype)
    psi[sector.states] = v
    return psi
