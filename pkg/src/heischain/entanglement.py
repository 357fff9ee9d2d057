"""Two-qubit concurrence: general Wootters construction and the X-state shortcuts."""

import numpy as np

from . import basis
from .errors import ParameterError, ValidationError

PHYS_TOL = 1e-10
# concurrences below this are roundoff at the max(0, .) hinge
HINGE_FLOOR = 1e-12

_YY = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


def _check_physical(rho, tol):
    problems = []
    if rho.shape != (4, 4):
        raise ValidationError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.abs(rho - rho.conj().T).max() > tol:
        problems.append("not Hermitian")
    if abs(np.trace(rho).real - 1) > tol:
        problems.append(f"trace {np.trace(rho).real:.12g} != 1")
    if np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0] < -tol:
        problems.append("not positive semidefinite")
    if problems:
        raise ValidationError("non-physical density matrix: " + ", ".join(problems))


def concurrence_wootters(rho, tol=PHYS_TOL):
    """Wootters concurrence of an arbitrary two-qubit density matrix.

    The decreasing lambdas (square roots of the eigenvalues of rho rho~,
    rho~ = (Y x Y) rho* (Y x Y)) are the singular values of
    sqrt(rho) (Y x Y) sqrt(rho)*, which avoids square roots of noisy
    near-zero eigenvalues.
    """
    rho = np.asarray(rho, dtype=complex)
    _check_physical(rho, tol)
    rho = 0.5 * (rho + rho.conj().T)
    p, U = np.linalg.eigh(rho)
    sqrt_rho = (U * np.sqrt(np.clip(p, 0, None))) @ U.conj().T
    lam = np.linalg.svd(sqrt_rho @ _YY @ sqrt_rho.conj(), compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence_x(u_plus, u_minus, z):
    if u_plus < 0 or u_minus < 0:
        raise ValidationError(f"negative population: u+={u_plus}, u-={u_minus}")
    c = 2 * (abs(z) - np.sqrt(u_plus * u_minus))
    return float(c) if c > HINGE_FLOOR else 0.0


def concurrence_su2(gzz):
    """Concurrence of an SU(2)-invariant pair state from its zz correlator."""
    if not -1 - 1e-12 <= gzz <= 1 + 1e-12:
        raise ParameterError(f"correlator must lie in [-1, 1], got {gzz!r}")
    c = 0.5 * (2 * abs(gzz) - gzz - 1)
    return float(c) if c > HINGE_FLOOR else 0.0


def concurrence_pair(pair):
    """Concurrence of a :class:`~heischain.observables.PairDensityMatrix`."""
    return concurrence_x(pair.u_plus, pair.u_minus, pair.z)


def _check_even(L):
    if not isinstance(L, (int, np.integer)) or L < 4 or L % 2:
        raise ParameterError(f"L must be an even integer >= 4, got {L!r}")
    return L // 2


def mg_concurrence(L):
    """Published closed form for the Majumdar-Ghosh nearest-neighbour concurrence.

    (1/2 + 2^-(L/2)) / (2 + (-1)^(L/2) 2^-(L/2-2)), kept verbatim.  It agrees
    with the exact superposition value only as L -> infinity (both tend to
    1/4); use :func:`mg_concurrence_exact` for finite rings.
    """
    h = _check_even(L)
    return (0.5 + 2.0 ** -h) / (2 + (-1) ** h * 2.0 ** -(h - 2))


def mg_concurrence_exact(L):
    """Nearest-neighbour concurrence of (psi1 + psi2)/norm on an L-ring.

    With s = <psi1|psi2> = (-1)^(L/2) 2^(1-L/2) and P the pair swap,
    P psi1 = -psi1 gives <sigma.sigma> = -3(1 + 2s)/(2 + 2s), hence
    C = (1/2 + 2s) / (2 + 2s), clipped at 0 (L = 6 gives exactly 0).
    """
    h = _check_even(L)
    s = (-1) ** h * 2.0 ** (1 - h)
    return max(0.0, (0.5 + 2 * s) / (2 + 2 * s))


def dimer_state(sector, pairs):
    """Product of singlets (|0>_i|1>_j - |1>_i|0>_j)/sqrt(2) over ``pairs``.

    Returned as a vector on ``sector``, which must have n_up = L/2.
    """
    amp = np.ones(sector.dim)
    for i, j in pairs:
        bi, bj = sector.site_bits(i), sector.site_bits(j)
        amp *= np.where(bi == bj, 0.0, np.where(bi == 0, 1.0, -1.0)) / np.sqrt(2)
    return amp


def mg_dimer_states(L):
    """The two dimer coverings of the ring, on the n_up = L/2 sector.

    The first pairs (0,1)(2,3)...; the second pairs (L-1,0)(1,2)(3,4)...
    """
    if L % 2:
        raise ParameterError("dimer coverings need even L")
    sec = basis.enumerate_sector(L, L // 2)
    psi1 = dimer_state(sec, [(k, k + 1) for k in range(0, L, 2)])
    psi2 = dimer_state(sec, [(L - 1, 0)] + [(k, k + 1) for k in range(1, L - 1, 2)])
    return sec, psi1, psi2


def mg_superposition(L):
    sec, psi1, psi2 = mg_dimer_states(L)
    psi = psi1 + psi2
    return sec, psi / np.linalg.norm(psi)
