"""Correlators, energies and two-site reduced states for ground and thermal ensembles.

An ensemble is reduced to a list of weighted blocks ``(sector, V, w)``: the
columns of ``V`` are sector eigenvectors and ``w`` their statistical
weights.  Because every weighted state lies in a single sector, elements of
the pair density matrix that change the pair magnetization vanish exactly.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from . import basis, eigen
from .errors import ConsistencyError, ParameterError, StateError

DJ = 1e-4
KINK_TOL = 1e-4
PATTERN_TOL = 1e-10


@dataclass(frozen=True)
class EnsembleSpec:
    kind: str
    L: int
    J: float
    T: float = None

    def __post_init__(self):
        basis.check_size(self.L)
        if self.kind == "ground":
            if self.T is not None:
                raise ParameterError("ground ensemble takes no temperature")
        elif self.kind == "thermal":
            if self.T is None or not self.T > 0:
                raise ParameterError(f"thermal ensemble needs T > 0, got {self.T!r}")
        else:
            raise ParameterError(f"unknown ensemble kind {self.kind!r}")

    @classmethod
    def ground(cls, L, J):
        return cls("ground", L, float(J))

    @classmethod
    def thermal(cls, L, J, T):
        return cls("thermal", L, float(J), float(T))


@dataclass(frozen=True)
class CorrelationSet:
    G1: float
    G2: float
    E: float
    log_z: float = None

    @property
    def Z(self):
        return None if self.log_z is None else float(np.exp(self.log_z))


@dataclass(frozen=True)
class PairDensityMatrix:
    """Two-site state in the basis |00>, |01>, |10>, |11>.

    The qubit label of a site is its bit value, so |00> is down-down.
    """

    u_plus: float
    w1: float
    z: complex
    w2: float
    u_minus: float

    def matrix(self):
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0], rho[1, 1], rho[2, 2], rho[3, 3] = self.u_plus, self.w1, self.w2, self.u_minus
        rho[1, 2] = self.z
        rho[2, 1] = np.conj(self.z)
        return rho

    @property
    def trace(self):
        return self.u_plus + self.w1 + self.w2 + self.u_minus

    @classmethod
    def from_matrix(cls, rho, atol=PATTERN_TOL):
        rho = np.asarray(rho)
        mask = np.ones((4, 4), dtype=bool)
        mask[[0, 1, 2, 3, 1, 2], [0, 1, 2, 3, 2, 1]] = False
        worst = np.abs(rho[mask]).max()
        if worst > atol:
            raise ConsistencyError(f"pair state breaks the X pattern: |entry| = {worst:.3e}")
        diag = np.real(np.diag(rho))
        return cls(float(diag[0]), float(diag[1]), complex(rho[1, 2]), float(diag[2]),
                   float(diag[3]))


def weighted_blocks(ensemble, data):
    """``(sector, V, w)`` triples describing ``ensemble``.

    ``data`` is a :class:`~heischain.eigen.GroundMultiplet` for ground
    ensembles and a :class:`~heischain.eigen.Spectrum` with vectors for
    thermal ones.
    """
    if ensemble.kind == "ground":
        if not isinstance(data, eigen.GroundMultiplet):
            raise StateError("ground ensemble needs a GroundMultiplet")
        n = data.degeneracy
        return [(sec, V, np.full(V.shape[1], 1.0 / n)) for sec, V in data.blocks.values()]
    if not isinstance(data, eigen.Spectrum) or not data.has_vectors:
        raise StateError("thermal ensemble needs a Spectrum computed with want_vectors=True")
    log_w = -data.eigenvalues / ensemble.T
    log_z = logsumexp(log_w)
    return [(b.sector, b.vectors, np.exp(-b.energies / ensemble.T - log_z))
            for b in data.blocks.values()]


def _probabilities(blocks):
    """Ensemble-averaged occupation probability of each configuration."""
    return [(sec, (V * V) @ w) for sec, V, w in blocks]


def bond_zz(sector, distance):
    """Bond-averaged sigma^z_j sigma^z_{j+d} for each configuration."""
    L = sector.L
    spins = 2 * np.array([sector.site_bits(j) for j in range(L)]) - 1
    return np.mean(spins * np.roll(spins, -distance, axis=0), axis=0)


def correlation_zz(ensemble, data, distance):
    if distance not in (1, 2):
        raise ParameterError(f"distance must be 1 or 2, got {distance!r}")
    total = 0.0
    for sec, p in _probabilities(weighted_blocks(ensemble, data)):
        total += p @ bond_zz(sec, distance)
    return float(total)


def pair_rdm_from_vector(sector, v, i, j):
    """4x4 reduced state of sites ``(i, j)`` for a real sector vector ``v``."""
    return _pair_matrix([(sector, np.asarray(v, dtype=float)[:, None], np.ones(1))], i, j)


def _pair_matrix(blocks, i, j):
    rho = np.zeros((4, 4), dtype=complex)
    for sec, V, w in blocks:
        bi, bj = sec.site_bits(i), sec.site_bits(j)
        label = 2 * bi + bj
        p = (V * V) @ w
        rho[np.diag_indices(4)] += np.bincount(label, weights=p, minlength=4)
        src = np.nonzero(label == 1)[0]
        if len(src):
            dst = sec.index_of(sec.states[src] ^ ((1 << i) | (1 << j)))
            rho[1, 2] += np.sum((V[src] * V[dst]) @ w)
    rho[2, 1] = np.conj(rho[1, 2])
    return rho


def reduce_pair(ensemble, data, i, j):
    L = ensemble.L
    if i == j or not (0 <= i < L and 0 <= j < L):
        raise ParameterError(f"invalid site pair ({i}, {j}) for L={L}")
    return PairDensityMatrix.from_matrix(_pair_matrix(weighted_blocks(ensemble, data), i, j))


def internal_energy(ensemble, data):
    if ensemble.kind == "ground":
        return float(data.energy)
    blocks = weighted_blocks(ensemble, data)
    return float(sum(w @ b.energies for (_, _, w), b in zip(blocks, data.blocks.values())))


def log_partition(spectrum, T):
    return float(logsumexp(-spectrum.eigenvalues / T))


def correlations(ensemble, data):
    G1 = correlation_zz(ensemble, data, 1)
    G2 = correlation_zz(ensemble, data, 2)
    E = internal_energy(ensemble, data)
    log_z = log_partition(data, ensemble.T) if ensemble.kind == "thermal" else None
    return CorrelationSet(G1, G2, E, log_z)


def g2_from_partition(L, J, T, dJ=DJ):
    """Next-nearest correlator per bond from -(T/3L) d ln Z / dJ."""
    if not T > 0:
        raise ParameterError(f"T must be positive, got {T!r}")
    if not dJ > 0:
        raise ParameterError("dJ must be positive")
    if np.isinf(T):
        return 0.0
    up = log_partition(eigen.full_spectrum(L, J + dJ), T)
    down = log_partition(eigen.full_spectrum(L, J - dJ), T)
    return -T / (3 * L) * (up - down) / (2 * dJ)


@dataclass(frozen=True)
class HellmannResult:
    """Ground G2 from the slope of the ground energy.

    At a level crossing ``crossing`` is set and ``left``/``right`` hold the
    two one-sided values; ``value`` is then their mean and not meaningful.
    """

    value: float
    crossing: bool
    left: float
    right: float


def g2_ground_hellmann(L, J, dJ=DJ, kink_tol=KINK_TOL, energy=None):
    """(1/3L) dE0/dJ by finite differences, with a level-crossing check.

    Second-order one-sided stencils give the left and right slopes; they
    agree to O(dJ^2) on a smooth branch and differ by the slope jump at a
    crossing.  A crossing is flagged when they differ by more than
    ``10 * kink_tol``.
    """
    if not dJ > 0:
        raise ParameterError("dJ must be positive")
    e = energy or (lambda x: eigen.ground_energy(L, x))
    em2, em1, e0, ep1, ep2 = (e(J + k * dJ) for k in (-2, -1, 0, 1, 2))
    scale = 1.0 / (3 * L)
    left = scale * (3 * e0 - 4 * em1 + em2) / (2 * dJ)
    right = scale * (-3 * e0 + 4 * ep1 - ep2) / (2 * dJ)
    crossing = abs(left - right) * 3 * L > 10 * kink_tol
    if crossing:
        return HellmannResult(0.5 * (left + right), True, left, right)
    centered = scale * (ep1 - em1) / (2 * dJ)
    return HellmannResult(centered, False, left, right)


def g1_from_energy(E, L, J, G2):
    return E / (3 * L) - J * G2
