"""J sweeps of the ground state, thermal (T, J) surfaces and threshold temperatures."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.special import logsumexp

from . import eigen
from .entanglement import concurrence_su2
from .errors import ConvergenceError, HeisChainError, ParameterError
from .observables import (
    DJ, KINK_TOL, EnsembleSpec, bond_zz, correlation_zz, g2_ground_hellmann,
)

T_MAX = 20.0
EPS = 1e-8
T_TOL = 1e-4
N_COARSE = 64


def _map(fn, items, workers):
    """Ordered map, optionally over a process pool."""
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True, eq=False)
class GroundPoint:
    J: float
    E0: float
    G1: float
    G2: float
    degeneracy: int
    crossing: bool

    @property
    def C1(self):
        return concurrence_su2(self.G1)

    @property
    def C2(self):
        return concurrence_su2(self.G2)


def ground_point(L, J, degeneracy_tol=eigen.DEGENERACY_TOL):
    gm = eigen.ground_multiplet(L, J, degeneracy_tol)
    ens = EnsembleSpec.ground(L, J)
    hf = g2_ground_hellmann(L, J, DJ, KINK_TOL)
    return GroundPoint(float(J), gm.energy, correlation_zz(ens, gm, 1),
                       correlation_zz(ens, gm, 2), gm.degeneracy, hf.crossing)


@dataclass(frozen=True, eq=False)
class GroundScan:
    L: int
    J_grid: np.ndarray
    E0: np.ndarray
    G1: np.ndarray
    G2: np.ndarray
    C1: np.ndarray
    C2: np.ndarray
    crossing_flags: np.ndarray
    degeneracy: np.ndarray = field(repr=False)


class _GroundTask:
    def __init__(self, L):
        self.L = L

    def __call__(self, J):
        try:
            return ground_point(self.L, J)
        except ConvergenceError as exc:
            raise ConvergenceError(f"at J={J!r}: {exc}", exc.residual) from exc
        except HeisChainError as exc:
            raise type(exc)(f"at J={J!r}: {exc}") from exc


def ground_scan(L, J_min, J_max, steps, workers=1):
    if not J_min < J_max:
        raise ParameterError("need J_min < J_max")
    if steps < 2:
        raise ParameterError("need at least 2 grid points")
    grid = np.linspace(J_min, J_max, steps)
    pts = _map(_GroundTask(L), grid, workers)
    G1 = np.array([p.G1 for p in pts])
    G2 = np.array([p.G2 for p in pts])
    return GroundScan(
        L, grid,
        np.array([p.E0 for p in pts]), G1, G2,
        np.array([concurrence_su2(g) for g in G1]),
        np.array([concurrence_su2(g) for g in G2]),
        np.array([p.crossing for p in pts]),
        np.array([p.degeneracy for p in pts]),
    )


class ThermalCorrelator:
    """Thermal nearest and next-nearest correlators at fixed (L, J), any T.

    Holds every eigenvalue and the per-eigenstate bond-averaged zz
    correlators, so changing T costs one weighted sum.
    """

    def __init__(self, L, J, degeneracy_tol=eigen.DEGENERACY_TOL):
        spec = eigen.full_spectrum(L, J, want_vectors=True)
        energies, g1, g2 = [], [], []
        for b in spec.blocks.values():
            P = b.vectors * b.vectors
            energies.append(b.energies)
            g1.append(bond_zz(b.sector, 1) @ P)
            g2.append(bond_zz(b.sector, 2) @ P)
        self.L, self.J = L, float(J)
        self.energies = np.concatenate(energies)
        self.g = {1: np.concatenate(g1), 2: np.concatenate(g2)}
        self.e0 = self.energies.min()
        self._ground = self.energies <= self.e0 + degeneracy_tol

    def weights(self, T):
        if T == 0:
            w = self._ground.astype(float)
            return w / w.sum()
        if not T > 0:
            raise ParameterError(f"T must be non-negative, got {T!r}")
        x = -(self.energies - self.e0) / T
        return np.exp(x - logsumexp(x))

    def correlator(self, T, distance):
        """zz correlator; T = 0 gives the equal-weight ground mixture."""
        return float(self.weights(T) @ self.g[distance])

    def concurrence(self, T, distance):
        return concurrence_su2(self.correlator(T, distance))

    def internal_energy(self, T):
        return float(self.weights(T) @ self.energies)


@dataclass(frozen=True, eq=False)
class ThermalGrid:
    L: int
    J_grid: np.ndarray
    T_grid: np.ndarray
    C1: np.ndarray  # shape (len(T_grid), len(J_grid))
    C2: np.ndarray
    G1: np.ndarray = field(repr=False)
    G2: np.ndarray = field(repr=False)


class _ThermalColumn:
    def __init__(self, L, T_grid):
        self.L, self.T_grid = L, T_grid

    def __call__(self, J):
        tc = ThermalCorrelator(self.L, J)
        return np.array([[tc.correlator(T, 1), tc.correlator(T, 2)] for T in self.T_grid])


def thermal_grid(L, J_grid, T_grid, workers=1):
    J_grid = np.asarray(J_grid, dtype=float)
    T_grid = np.asarray(T_grid, dtype=float)
    if np.any(T_grid <= 0):
        raise ParameterError("all temperatures must be positive")
    cols = _map(_ThermalColumn(L, T_grid), J_grid, workers)
    G = np.stack(cols, axis=1)  # (T, J, 2)
    su2 = np.vectorize(concurrence_su2, otypes=[float])
    return ThermalGrid(L, J_grid, T_grid, su2(G[..., 0]), su2(G[..., 1]),
                       G[..., 0], G[..., 1])


def threshold_temperature(L, J, distance, T_max=T_MAX, eps=EPS, tol=T_TOL, correlator=None):
    """Highest temperature at which the pair concurrence exceeds ``eps``.

    A 64-point geometric grid from ``T_max`` down to ``tol`` is scanned from
    the top; the first entangled point brackets the threshold together with
    the grid point above it, and bisection narrows the bracket to ``tol``.
    Scanning downward keeps the supremum even when C(T) is not monotonic.
    Returns 0 when the pair is separable everywhere, including T -> 0+.
    """
    if not T_max > 0:
        raise ParameterError("T_max must be positive")
    tc = correlator or ThermalCorrelator(L, J)

    def entangled(T):
        return tc.concurrence(T, distance) > eps

    if entangled(T_max):
        raise ParameterError(
            f"concurrence still positive at T_max={T_max} (L={L}, J={J}); raise T_max")
    grid = np.geomspace(T_max, tol, N_COARSE)
    hi = T_max
    for T in grid[1:]:
        if entangled(T):
            lo = T
            break
        hi = T
    else:
        if not entangled(0.0):
            return 0.0
        lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if entangled(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True, eq=False)
class ThresholdCurve:
    L: int
    distance: int
    J_grid: np.ndarray
    T_th: np.ndarray
    resolution: float


class _ThresholdTask:
    def __init__(self, distances, T_max, eps, tol):
        self.distances, self.T_max, self.eps, self.tol = distances, T_max, eps, tol

    def __call__(self, LJ):
        L, J = LJ
        tc = ThermalCorrelator(L, J)
        return [threshold_temperature(L, J, d, self.T_max, self.eps, self.tol, tc)
                for d in self.distances]


def threshold_curves(L_list, J_grid, distances=(1, 2), T_max=T_MAX, eps=EPS, tol=T_TOL,
                     workers=1):
    """Threshold curves for several distances sharing one spectrum per (L, J).

    Returns ``{distance: [ThresholdCurve per L]}``.
    """
    for L in L_list:
        if not 4 <= L <= 12:
            raise ParameterError(f"threshold curves are supported for 4 <= L <= 12, got {L}")
    J_grid = np.asarray(J_grid, dtype=float)
    jobs = [(L, J) for L in L_list for J in J_grid]
    res = np.array(_map(_ThresholdTask(tuple(distances), T_max, eps, tol), jobs, workers))
    res = res.reshape(len(L_list), len(J_grid), len(distances))
    return {d: [ThresholdCurve(L, d, J_grid, res[a, :, k], tol) for a, L in enumerate(L_list)]
            for k, d in enumerate(distances)}


def threshold_curve(L_list, J_grid, distance, T_max=T_MAX, eps=EPS, tol=T_TOL, workers=1):
    return threshold_curves(L_list, J_grid, (distance,), T_max, eps, tol, workers)[distance]
