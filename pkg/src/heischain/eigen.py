"""Ground spaces and full spectra of the sector Hamiltonians."""

from dataclasses import dataclass, field

import numpy as np

from . import basis, hamiltonian
from .errors import ConvergenceError, ParameterError, ResourceError

DEGENERACY_TOL = 1e-8
DENSE_MAX_DIM = 512
MAX_L_VECTORS = 14
MAX_L_VALUES = 16


@dataclass(frozen=True, eq=False)
class GroundSolution:
    energy: float
    vectors: np.ndarray = field(repr=False)  # (dim, degeneracy), orthonormal columns
    degeneracy_tol: float = DEGENERACY_TOL

    @property
    def degeneracy(self):
        return self.vectors.shape[1]


def _residual_tol(energy):
    return 1e-10 * max(1.0, abs(energy))


def lanczos_lowest(H, v0, locked=None, maxiter=None):
    """Lowest Ritz pair of ``H`` on the complement of ``locked``.

    Full reorthogonalization against all Krylov vectors and the locked
    columns.  Returns ``(theta, x, residual_norm)``.
    """
    dim = H.dim
    maxiter = dim if maxiter is None else min(maxiter, dim)
    locked = np.zeros((dim, 0)) if locked is None else locked

    def project(w):
        # two passes of classical Gram-Schmidt
        for _ in range(2):
            w = w - locked @ (locked.T @ w)
            if Q:
                Qm = np.array(Q).T
                w = w - Qm @ (Qm.T @ w)
        return w

    Q = []
    q = project(np.asarray(v0, dtype=float))
    q /= np.linalg.norm(q)
    alphas, betas = [], []
    theta, x, res = np.inf, q, np.inf
    for k in range(maxiter):
        Q.append(q)
        w = H.matrix @ q
        alphas.append(q @ w)
        w = project(w)
        beta = np.linalg.norm(w)
        if k % 5 == 4 or beta < 1e-12 or k == maxiter - 1:
            T = np.diag(alphas) + np.diag(betas, 1) + np.diag(betas, -1)
            evals, evecs = np.linalg.eigh(T)
            theta = evals[0]
            if beta * abs(evecs[-1, 0]) < 0.1 * _residual_tol(theta) or beta < 1e-12 \
                    or k == maxiter - 1:
                x = np.array(Q).T @ evecs[:, 0]
                x /= np.linalg.norm(x)
                res = np.linalg.norm(H.matrix @ x - theta * x)
                if res <= _residual_tol(theta):
                    return theta, x, res
        if beta < 1e-12:
            break
        betas.append(beta)
        q = w / beta
    raise ConvergenceError(f"Lanczos did not converge in {len(Q)} steps", res)


def _start_vector(dim, seed):
    return np.random.default_rng(seed).standard_normal(dim)


def ground_space(H, degeneracy_tol=DEGENERACY_TOL, dense_max_dim=DENSE_MAX_DIM):
    """Lowest eigenvalue of ``H`` and an orthonormal basis of its eigenspace.

    Every eigenvector within ``degeneracy_tol`` of the lowest eigenvalue is
    returned.  Sectors larger than ``dense_max_dim`` use Lanczos with
    deflation: after each converged vector the solver restarts on the
    orthogonal complement until the next level lies above the tolerance.
    """
    if degeneracy_tol <= 0:
        raise ParameterError("degeneracy_tol must be positive")
    if H.dim <= dense_max_dim:
        evals, evecs = np.linalg.eigh(H.toarray())
        keep = evals <= evals[0] + degeneracy_tol
        return GroundSolution(float(evals[0]), evecs[:, keep], degeneracy_tol)

    found_e, found_v = [], []
    seed = 0
    while len(found_v) < H.dim:
        locked = np.array(found_v).T if found_v else None
        theta, x, _ = lanczos_lowest(H, _start_vector(H.dim, seed), locked)
        seed += 1
        if found_e and theta > min(found_e) + degeneracy_tol:
            break
        found_e.append(theta)
        found_v.append(x)
    e0 = min(found_e)
    keep = [v for e, v in zip(found_e, found_v) if e <= e0 + degeneracy_tol]
    V = np.array(keep).T
    # re-orthonormalize the multiplet to clean up deflation round-off
    V, _ = np.linalg.qr(V)
    return GroundSolution(float(e0), V, degeneracy_tol)


def ground_energy(L, J, dense_max_dim=DENSE_MAX_DIM):
    """Global ground energy.

    Every SU(2) multiplet has a member with the smallest |S^z|, so the
    minimum over all sectors is attained in sector n_up = L // 2.
    """
    H = hamiltonian.build(L, J, basis.enumerate_sector(L, L // 2))
    if H.dim <= dense_max_dim:
        return float(np.linalg.eigvalsh(H.toarray())[0])
    theta, _, _ = lanczos_lowest(H, _start_vector(H.dim, 0))
    return float(theta)


@dataclass(frozen=True, eq=False)
class GroundMultiplet:
    """Global ground states of the ring collected over all sectors.

    ``blocks`` maps n_up to ``(sector, vectors)`` for every sector that holds
    part of the multiplet.
    """

    L: int
    J: float
    energy: float
    blocks: dict = field(repr=False)

    @property
    def degeneracy(self):
        return sum(v.shape[1] for _, v in self.blocks.values())


def ground_multiplet(L, J, degeneracy_tol=DEGENERACY_TOL, dense_max_dim=DENSE_MAX_DIM):
    L = basis.check_size(L)
    sols = {}
    for sec in basis.all_sectors(L):
        H = hamiltonian.build(L, J, sec)
        sols[sec.n_up] = (sec, ground_space(H, degeneracy_tol, dense_max_dim))
    e0 = min(g.energy for _, g in sols.values())
    blocks = {}
    for n, (sec, g) in sols.items():
        if g.energy <= e0 + degeneracy_tol:
            blocks[n] = (sec, g.vectors)
    return GroundMultiplet(L, float(J), e0, blocks)


@dataclass(frozen=True, eq=False)
class SectorBlock:
    sector: basis.BasisSector = field(repr=False)
    energies: np.ndarray = field(repr=False)
    vectors: np.ndarray = field(default=None, repr=False)
    diag_trace: float = 0.0


@dataclass(frozen=True, eq=False)
class Spectrum:
    L: int
    J: float
    eigenvalues: np.ndarray = field(repr=False)
    blocks: dict = field(repr=False)  # n_up -> SectorBlock

    @property
    def has_vectors(self):
        return all(b.vectors is not None for b in self.blocks.values())

    @property
    def per_sector_vectors(self):
        return {n: b.vectors for n, b in self.blocks.items()}


def full_spectrum(L, J, want_vectors=False):
    L = basis.check_size(L)
    cap = MAX_L_VECTORS if want_vectors else MAX_L_VALUES
    if L > cap:
        raise ResourceError(f"full spectrum with want_vectors={want_vectors} is capped at L={cap}")
    blocks = {}
    for sec in basis.all_sectors(L):
        H = hamiltonian.build(L, J, sec)
        dense = H.toarray()
        if want_vectors:
            evals, evecs = np.linalg.eigh(dense)
        else:
            evals, evecs = np.linalg.eigvalsh(dense), None
        blocks[sec.n_up] = SectorBlock(sec, evals, evecs, float(H.diag.sum()))
    allvals = np.sort(np.concatenate([b.energies for b in blocks.values()]))
    return Spectrum(L, float(J), allvals, blocks)
