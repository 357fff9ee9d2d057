import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from heischain import entanglement as ent
from heischain.errors import ParameterError, ValidationError
from heischain.observables import PairDensityMatrix, pair_rdm_from_vector

SINGLET = np.zeros((4, 4))
SINGLET[1, 1] = SINGLET[2, 2] = 0.5
SINGLET[1, 2] = SINGLET[2, 1] = -0.5


def x_state(g):
    return PairDensityMatrix((1 + g) / 4, (1 - g) / 4, g / 2, (1 - g) / 4, (1 + g) / 4)


def test_wootters_reference_states():
    assert ent.concurrence_wootters(SINGLET) == pytest.approx(1, abs=1e-12)
    assert ent.concurrence_wootters(np.eye(4) / 4) == pytest.approx(0, abs=1e-12)
    bell = np.zeros(4)
    bell[[0, 3]] = 1 / np.sqrt(2)
    assert ent.concurrence_wootters(np.outer(bell, bell)) == pytest.approx(1, abs=1e-12)
    prod = np.kron([1, 0], [0.6, 0.8])
    assert ent.concurrence_wootters(np.outer(prod, prod)) == pytest.approx(0, abs=1e-12)


def test_reference_value_0386():
    g = -0.5908
    assert ent.concurrence_su2(g) == pytest.approx(0.386, abs=5e-4)
    assert ent.concurrence_wootters(x_state(g).matrix()) == pytest.approx(0.386, abs=5e-4)
    p = x_state(g)
    assert ent.concurrence_x(p.u_plus, p.u_minus, p.z) == pytest.approx(0.386, abs=5e-4)


def test_wootters_rejects_nonphysical():
    with pytest.raises(ValidationError, match="trace"):
        ent.concurrence_wootters(np.eye(4))
    with pytest.raises(ValidationError, match="semidefinite"):
        ent.concurrence_wootters(np.diag([0.5, 0.5, 0.5, -0.5]))
    bad = np.eye(4) / 4
    bad[0, 1] = 0.1
    with pytest.raises(ValidationError, match="Hermitian"):
        ent.concurrence_wootters(bad)


def test_x_formula_reference_states():
    assert ent.concurrence_x(0, 0, -0.5) == 1
    assert ent.concurrence_x(0.25, 0.25, 0) == 0
    with pytest.raises(ValidationError):
        ent.concurrence_x(-0.1, 0.2, 0)


@st.composite
def random_x_states(draw):
    a = np.array(draw(st.lists(st.floats(1e-3, 1), min_size=4, max_size=4)))
    a /= a.sum()
    u_p, w1, w2, u_m = a
    r = draw(st.floats(0, 1)) * np.sqrt(w1 * w2)
    phase = draw(st.floats(0, 2 * np.pi))
    return PairDensityMatrix(u_p, w1, r * np.exp(1j * phase), w2, u_m)


@settings(max_examples=1000, deadline=None)
@given(random_x_states())
def test_x_formula_equals_wootters(p):
    assert abs(ent.concurrence_pair(p) - ent.concurrence_wootters(p.matrix())) < 1e-10


@settings(max_examples=200)
@given(st.floats(-1, 1))
def test_su2_formula_equals_x_formula(g):
    p = x_state(g)
    assert abs(ent.concurrence_su2(g) - ent.concurrence_pair(p)) < 1e-12


def test_su2_formula_values():
    assert ent.concurrence_su2(-1) == 1
    for g in np.linspace(0, 1, 11):
        assert ent.concurrence_su2(g) == 0
    with pytest.raises(ParameterError):
        ent.concurrence_su2(1.5)


def test_su2_formula_shape():
    g = np.linspace(-1, -1 / 3, 200)
    c = np.array([ent.concurrence_su2(x) for x in g])
    assert np.all(np.diff(c) < 0)
    assert all(ent.concurrence_su2(x) == 0 for x in np.linspace(-1 / 3, 1, 50))


def test_published_mg_formula_values():
    assert ent.mg_concurrence(4) == pytest.approx(0.25)
    assert ent.mg_concurrence(6) == pytest.approx(5 / 12)
    for L in range(4, 41, 2):
        assert abs(ent.mg_concurrence(L) - 0.25) < 2.0 ** (-L / 2 + 2)
    with pytest.raises(ParameterError):
        ent.mg_concurrence(7)


@pytest.mark.parametrize("L", [4, 6, 8, 10, 12, 14])
def test_exact_mg_formula_matches_ed(L):
    sec, psi = ent.mg_superposition(L)
    for i in range(L):
        rho = pair_rdm_from_vector(sec, psi, i, (i + 1) % L)
        assert ent.concurrence_wootters(rho) == pytest.approx(ent.mg_concurrence_exact(L), abs=1e-10)


def test_exact_mg_formula_limit():
    for L in range(4, 41, 2):
        assert abs(ent.mg_concurrence_exact(L) - 0.25) < 2.0 ** (-L / 2 + 2)


def test_dimer_overlap():
    for L in (4, 6, 8, 10):
        _, p1, p2 = ent.mg_dimer_states(L)
        assert np.linalg.norm(p1) == pytest.approx(1)
        assert p1 @ p2 == pytest.approx((-1) ** (L // 2) * 2.0 ** (1 - L // 2))
