"""
Independent routes to the same numbers
======================================

Correlators come out of eigenvectors directly, from derivatives of ln Z or
E0 with respect to J, and from the internal energy.  Concurrence comes from
the Wootters construction, the X-state formula, or the zz correlator alone.
This script runs the same cross-checks as ``heischain validate``.

To run:
    python demos/04_independent_routes.py
"""

from heischain import eigen, observables as obs, validate

L, J, T = 8, 0.3, 1.0
spec = eigen.full_spectrum(L, J, want_vectors=True)
ens = obs.EnsembleSpec.thermal(L, J, T)
c = obs.correlations(ens, spec)
print(f"direct G2 = {c.G2:.8f}   from d lnZ/dJ = {obs.g2_from_partition(L, J, T):.8f}")
print(f"direct G1 = {c.G1:.8f}   from energy   = {obs.g1_from_energy(c.E, L, J, c.G2):.8f}")

hf = obs.g2_ground_hellmann(L, J)
gm = eigen.ground_multiplet(L, J)
print(f"ground G2 = {obs.correlation_zz(obs.EnsembleSpec.ground(L, J), gm, 2):.8f}"
      f"   from dE0/dJ = {hf.value:.8f}")

# At the level crossing the one-sided slopes disagree.
print("J=1/2:", obs.g2_ground_hellmann(L, 0.5))

print()
print(validate.format_report(validate.run_checks(6)))
