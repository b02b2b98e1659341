import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlat import _tables
from qlat.exact import Dyadic, DyadicMatrix, det
from qlat.groups import closure
from qlat.quaternions import (E, I, J, K, OMEGA, HurwitzQuaternion, _table_matrix, phi_inverse,
                              quat_conj, quat_mul, quat_norm, tau, tau_generators, unit_group)


def left_matrix(q):
    """Real matrix of x -> q x in the basis (1, i, j, k)."""
    a, b, c, d = (Fraction(x, 2) for x in q.coords)
    return [[a, -b, -c, -d],
            [b, a, -d, c],
            [c, d, a, -b],
            [d, -c, b, a]]


def oracle_product(p, q):
    m = left_matrix(p)
    v = [Fraction(x, 2) for x in q.coords]
    return tuple(sum(m[r][s] * v[s] for s in range(4)) for r in range(4))


def all_units():
    out = set()
    for c in itertools.product(range(-2, 3), repeat=4):
        if sum(x * x for x in c) == 4 and len({x % 2 for x in c}) == 1:
            out.add(HurwitzQuaternion(*c))
    return out


hurwitz = st.one_of(
    st.tuples(*[st.integers(-4, 4).map(lambda x: 2 * x)] * 4),
    st.tuples(*[st.integers(-4, 3).map(lambda x: 2 * x + 1)] * 4),
).map(lambda c: HurwitzQuaternion(*c))


def test_basic_products():
    assert I * J == K
    assert J * I == -K
    assert I * I == -E
    assert OMEGA * OMEGA * OMEGA == -E


def test_norms():
    assert OMEGA.norm() == 1
    assert quat_norm(HurwitzQuaternion.from_coords(1, 1, 0, 0)) == 2
    assert quat_norm(E) == 1


def test_conjugate():
    assert quat_conj(OMEGA) == HurwitzQuaternion(1, -1, -1, -1)
    assert OMEGA * OMEGA.conj() == E


def test_parity_enforced():
    with pytest.raises(ValueError):
        HurwitzQuaternion(1, 0, 0, 0)
    with pytest.raises(ValueError):
        HurwitzQuaternion.from_coords("1/4", 0, 0, 0)


def test_phi_inverse_examples():
    assert phi_inverse(OMEGA) == (Dyadic(1, 1),) * 4
    assert phi_inverse(-I) == (0, -1, 0, 0)


def test_str():
    assert str(OMEGA) == "1/2+1/2i+1/2j+1/2k"
    assert str(-J) == "-j"


@settings(max_examples=200)
@given(hurwitz, hurwitz)
def test_product_matches_matrix_oracle(p, q):
    r = quat_mul(p, q)
    assert tuple(Fraction(x, 2) for x in r.coords) == oracle_product(p, q)


@settings(max_examples=150)
@given(hurwitz, hurwitz, hurwitz)
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=150)
@given(hurwitz, hurwitz)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()


# -- the unit group -----------------------------------------------------------

def test_unit_group_is_all_norm_one_hurwitz_quaternions():
    g = unit_group()
    assert len(g) == 24
    assert set(g.elements) == all_units()


def test_unit_group_structure():
    g = unit_group()
    assert not g.is_abelian()
    assert g.involutions() == [-E]
    assert all(q.norm() == 1 for q in g.elements)


def test_unit_group_generator_order_irrelevant():
    assert set(unit_group((OMEGA, K, J, I)).elements) == set(unit_group().elements)
    assert set(unit_group((I, OMEGA)).elements) == all_units()


def test_unit_group_cap():
    with pytest.raises(RuntimeError):
        unit_group(cap=10)


# -- tau ----------------------------------------------------------------------

def test_tau_is_a_homomorphism_on_all_pairs():
    units = unit_group().elements
    mats = {q: tau(q) for q in units}
    for a in units:
        for b in units:
            assert mats[a * b] == mats[a] @ mats[b]


def test_tau_images_are_orthogonal_with_det_one():
    for q in unit_group().elements:
        m = tau(q)
        assert m.is_orthogonal()
        assert det(m) == 1


def test_tau_generator_relations():
    t = tau_generators()
    assert t["i"] @ t["j"] == t["k"]
    for s in "ijk":
        assert t[s] @ t[s] == -DyadicMatrix.identity(4)


def test_tau_omega_entries_are_halves():
    assert set(tau(OMEGA).entries) == {Dyadic(1, 1), Dyadic(-1, 1)}


def test_tau_omega_cubed():
    m = tau(OMEGA)
    assert m @ m @ m == -DyadicMatrix.identity(4)


def test_printed_omega_matrix_is_tau_of_omega_squared():
    printed = _table_matrix(_tables.TAU_OMEGA_DISPLAY)
    assert printed == tau(OMEGA * OMEGA)
    assert printed != tau(OMEGA)


def test_tau_is_faithful_on_units():
    mats = {tau(q) for q in unit_group().elements}
    assert len(mats) == 24


def test_printed_generator_set_generates_same_group():
    t = tau_generators()
    printed = _table_matrix(_tables.TAU_OMEGA_DISPLAY)
    a = closure([t["i"], t["j"], printed], cap=100)
    b = closure([t["i"], t["j"], tau(OMEGA)], cap=100)
    assert a.order == b.order == 24
    assert {x.key() for x in a.elements} == {x.key() for x in b.elements}
