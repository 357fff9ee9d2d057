import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from heischain import eigen, observables as obs, oracle
from heischain.entanglement import concurrence_pair, concurrence_su2, concurrence_wootters
from heischain.errors import ConsistencyError, ParameterError, StateError

G, T = obs.EnsembleSpec.ground, obs.EnsembleSpec.thermal


def ground(L, J):
    return G(L, J), eigen.ground_multiplet(L, J)


def thermal(L, J, temp):
    return T(L, J, temp), eigen.full_spectrum(L, J, want_vectors=True)


def test_ensemble_spec_validation():
    with pytest.raises(ParameterError):
        obs.EnsembleSpec("thermal", 6, 0.0, -1.0)
    with pytest.raises(ParameterError):
        obs.EnsembleSpec("ground", 6, 0.0, 1.0)
    with pytest.raises(ParameterError):
        obs.EnsembleSpec("hot", 6, 0.0)


def test_l4_ground_nearest_pair():
    ens, gm = ground(4, 0.0)
    assert obs.correlation_zz(ens, gm, 1) == pytest.approx(-2 / 3, abs=1e-12)
    p = obs.reduce_pair(ens, gm, 0, 1)
    assert p.u_plus == pytest.approx((1 - 2 / 3) / 4, abs=1e-12)
    assert p.u_minus == pytest.approx(p.u_plus, abs=1e-12)
    assert p.z == pytest.approx(-1 / 3, abs=1e-12)
    # oracle: literal partial trace of the 16x16 ground projector
    ref = oracle.dense_pair_rdm(oracle.dense_build(4, 0.0), ens, 0, 1)
    assert np.abs(ref.matrix() - p.matrix()).max() < 1e-12


def test_g1_from_energy_l4():
    assert obs.g1_from_energy(-8.0, 4, 0.0, 0.123) == pytest.approx(-2 / 3)
    assert obs.g1_from_energy(-12.0, 6, 0.0, 0.5) == pytest.approx(-12 / 18)


def test_singlet_pair_state():
    from heischain.entanglement import mg_dimer_states
    sec, psi1, _ = mg_dimer_states(4)
    rho = obs.pair_rdm_from_vector(sec, psi1, 0, 1)
    p = obs.PairDensityMatrix.from_matrix(rho)
    assert (p.u_plus, p.u_minus) == pytest.approx((0, 0), abs=1e-15)
    assert (p.w1, p.w2) == pytest.approx((0.5, 0.5))
    assert p.z == pytest.approx(-0.5)


def test_infinite_temperature_limit():
    ens, spec = thermal(6, 0.4, 1e12)
    p = obs.reduce_pair(ens, spec, 0, 1)
    assert np.abs(p.matrix() - np.eye(4) / 4).max() < 1e-9
    for d in (1, 2):
        assert abs(obs.correlation_zz(ens, spec, d)) < 1e-9
    assert obs.g2_from_partition(6, 0.4, np.inf) == 0.0
    assert abs(obs.g2_from_partition(6, 0.4, 1e9)) < 1e-6


def test_mg_pure_dimer_nearest_bonds():
    from heischain.entanglement import mg_dimer_states
    sec, psi1, _ = mg_dimer_states(8)
    zz = [np.real(np.diag(obs.pair_rdm_from_vector(sec, psi1, j, (j + 1) % 8))) @ [1, -1, -1, 1]
          for j in range(8)]
    assert zz == pytest.approx([-1, 0] * 4, abs=1e-12)
    assert np.mean(zz) == pytest.approx(-0.5)


def test_reduce_pair_errors():
    ens, gm = ground(4, 0.0)
    with pytest.raises(ParameterError):
        obs.reduce_pair(ens, gm, 1, 1)
    with pytest.raises(ParameterError):
        obs.correlation_zz(ens, gm, 3)
    with pytest.raises(StateError):
        obs.reduce_pair(T(4, 0.0, 1.0), eigen.full_spectrum(4, 0.0), 0, 1)
    with pytest.raises(StateError):
        obs.reduce_pair(ens, eigen.full_spectrum(4, 0.0, True), 0, 1)


def test_pattern_violation_detected():
    rho = np.eye(4) / 4
    rho[0, 3] = rho[3, 0] = 0.01
    with pytest.raises(ConsistencyError):
        obs.PairDensityMatrix.from_matrix(rho)


def test_partition_route_l6():
    ens, spec = thermal(6, 0.3, 1.0)
    direct = obs.correlation_zz(ens, spec, 2)
    assert obs.g2_from_partition(6, 0.3, 1.0) == pytest.approx(direct, abs=1e-5)


def test_partition_route_low_temperature_limit():
    ens, gm = ground(6, 0.0)
    g2_ground = oracle_ground_g2(6, 0.0)
    assert obs.correlation_zz(ens, gm, 2) == pytest.approx(g2_ground, abs=1e-10)
    assert obs.g2_from_partition(6, 0.0, 0.05) == pytest.approx(g2_ground, abs=1e-4)


def oracle_ground_g2(L, J):
    system = oracle.dense_build(L, J)
    p = oracle.dense_pair_rdm(system, G(L, J), 0, 2)
    return p.u_plus + p.u_minus - p.w1 - p.w2


def test_partition_route_rejects_bad_temperature():
    with pytest.raises(ParameterError):
        obs.g2_from_partition(6, 0.3, 0.0)


@pytest.mark.parametrize("L,J", [(8, 0.0), (6, -1.0)])
def test_hellmann_route(L, J):
    hf = obs.g2_ground_hellmann(L, J)
    assert not hf.crossing
    assert hf.value == pytest.approx(oracle_ground_g2(L, J), abs=1e-5)


@pytest.mark.parametrize("L", [4, 6, 8, 10])
def test_hellmann_flags_mg_crossing(L):
    hf = obs.g2_ground_hellmann(L, 0.5)
    assert hf.crossing
    assert hf.left != pytest.approx(hf.right, abs=1e-3)


@pytest.mark.parametrize("L", [4, 5, 6, 7, 8, 9, 10])
def test_hellmann_route_grid(L):
    for J in (-0.9, -0.45, 0.05, 0.35):
        hf = obs.g2_ground_hellmann(L, J)
        ens, gm = ground(L, J)
        assert not hf.crossing
        assert hf.value == pytest.approx(obs.correlation_zz(ens, gm, 2), abs=1e-5)


@pytest.mark.parametrize("L", [4, 7, 10])
@pytest.mark.parametrize("temp", [0.5, 1.0, 2.0, 5.0])
def test_partition_route_grid(L, temp):
    J = 0.45 if L % 2 else -0.35
    ens, spec = thermal(L, J, temp)
    assert obs.g2_from_partition(L, J, temp) == pytest.approx(
        obs.correlation_zz(ens, spec, 2), abs=1e-5)


def test_g1_from_energy_thermal():
    ens, spec = thermal(6, 0.4, 2.0)
    c = obs.correlations(ens, spec)
    assert obs.g1_from_energy(c.E, 6, 0.4, c.G2) == pytest.approx(c.G1, abs=1e-8)


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 9), st.floats(-1.5, 1.5), st.one_of(st.none(), st.floats(0.05, 50)))
def test_energy_identity_and_su2_pattern(L, J, temp):
    ens, data = ground(L, J) if temp is None else thermal(L, J, temp)
    c = obs.correlations(ens, data)
    assert -1 <= c.G1 <= 1 and -1 <= c.G2 <= 1
    assert abs(c.E - (3 * L * c.G1 + 3 * J * L * c.G2)) <= 1e-8 * max(1, abs(c.E))
    for d, g in ((1, c.G1), (2, c.G2)):
        p = obs.reduce_pair(ens, data, 0, d)
        assert abs(p.trace - 1) < 1e-12
        assert p.u_plus >= 0 and p.u_minus >= 0 and p.w1 * p.w2 >= abs(p.z) ** 2 - 1e-14
        assert abs(p.u_plus - p.u_minus) < 1e-9 and abs(p.w1 - p.w2) < 1e-9
        assert abs(p.z.imag) < 1e-12 and abs(p.z.real - g / 2) < 1e-9
        cx = concurrence_pair(p)
        assert abs(cx - concurrence_wootters(p.matrix())) < 1e-10
        assert abs(cx - concurrence_su2(g)) < 1e-10


@pytest.mark.parametrize("L", range(4, 13))
def test_high_temperature_suppression(L):
    from heischain.scan import ThermalCorrelator
    tc = ThermalCorrelator(L, 0.5)
    prev = [np.inf, np.inf]
    for temp in (10, 15, 20, 40, 80):
        for k, d in enumerate((1, 2)):
            g = abs(tc.correlator(temp, d))
            assert g < prev[k]
            prev[k] = g
    assert abs(tc.correlator(20, 1)) < 0.2 and abs(tc.correlator(20, 2)) < 0.2


def test_thermal_weights_normalized():
    ens, spec = thermal(7, -0.2, 0.3)
    total = sum(w.sum() for _, _, w in obs.weighted_blocks(ens, spec))
    assert total == pytest.approx(1, abs=1e-12)
    assert obs.correlations(ens, spec).Z == pytest.approx(
        np.exp(-spec.eigenvalues / 0.3).sum(), rel=1e-12)
