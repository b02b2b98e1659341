import random
from collections import Counter
from fractions import Fraction

import pytest

from qlat.exact import DyadicMatrix
from qlat.groups import (GroupTooLarge, abelianization_order, character_norm, closure,
                         commutator_subgroup, conjugacy_classes, derived_series, element_order,
                         element_orders, is_solvable)
from qlat.quaternions import I, J, OMEGA, tau, unit_group
from qlat.tensor import fact1_matrices, pure_tensor_generators, wf4_generators


# -- signed-permutation oracle ------------------------------------------------
# a signed permutation (p, s) maps basis vector e_c to s[c] * e_p[c]

def to_signed(m):
    n = m.rows
    p, s = [0] * n, [0] * n
    for r in range(n):
        for c in range(n):
            v = int(m.numerators[r, c])
            if v:
                p[c], s[c] = r, v
    return tuple(p), tuple(s)


def sp_mul(a, b):
    """Signed permutation of the matrix product a @ b."""
    (pa, sa), (pb, sb) = a, b
    return tuple(pa[pb[c]] for c in range(len(pa))), tuple(sa[pb[c]] * sb[c] for c in range(len(pa)))


def sp_inv(a):
    p, s = a
    q, t = [0] * len(p), [0] * len(p)
    for c, r in enumerate(p):
        q[r], t[r] = c, s[c]
    return tuple(q), tuple(t)


def sp_closure(gens):
    n = len(gens[0][0])
    ident = (tuple(range(n)), (1,) * n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = sp_mul(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def sp_classes(elements):
    left = set(elements)
    sizes = []
    while left:
        x = left.pop()
        cls = {sp_mul(sp_mul(sp_inv(g), x), g) for g in elements}
        left -= cls
        sizes.append(len(cls))
    return sorted(sizes)


def sp_derived(elements):
    comms = {sp_mul(sp_mul(sp_inv(a), sp_inv(b)), sp_mul(a, b)) for a in elements for b in elements}
    return sp_closure(list(comms))


# -- brute-force oracles on matrices ------------------------------------------

def brute_classes(g):
    left = set(x.key() for x in g.elements)
    by_key = {x.key(): x for x in g.elements}
    sizes = []
    while left:
        x = by_key[left.pop()]
        cls = {(h.T @ x @ h).key() for h in g.elements}
        left -= cls
        sizes.append(len(cls))
    return sorted(sizes)


def brute_derived_orders(g):
    orders = [g.order]
    elems = g.elements
    while True:
        comms = list({(a.T @ b.T @ a @ b).key(): a.T @ b.T @ a @ b for a in elems for b in elems}.values())
        h = closure(comms, cap=g.cap)
        if h.order == len(elems):
            return orders
        orders.append(h.order)
        if h.order == 1:
            return orders
        elems = h.elements


@pytest.fixture(scope="module")
def unit24():
    return closure([tau(I), tau(J), tau(OMEGA)], cap=100)


# -- closure ------------------------------------------------------------------

def test_unit_group_image_has_24_elements(unit24):
    assert unit24.order == 24


def test_wf4_closure(wf4_group):
    assert wf4_group.order == 1152


def test_pure512_closure(pure512):
    assert pure512.order == 512
    assert len(sp_closure([to_signed(g) for g in pure_tensor_generators()])) == 512


def test_closure_cap_exceeded_for_fact1():
    with pytest.raises(GroupTooLarge, match="larger than cap"):
        closure(fact1_matrices(), cap=2000)


def test_closure_rejects_bad_generators():
    with pytest.raises(ValueError):
        closure([DyadicMatrix.from_rows([[1, 1], [0, 1]])])
    with pytest.raises(ValueError):
        closure([DyadicMatrix.identity(2), DyadicMatrix.identity(3)])
    with pytest.raises(ValueError):
        closure([])


@pytest.mark.parametrize("seed", range(5))
def test_closure_generator_order_independent(seed):
    gens = pure_tensor_generators()
    random.Random(seed).shuffle(gens)
    a = {g.key() for g in closure(gens, cap=1000).elements}
    b = {g.key() for g in closure(pure_tensor_generators(), cap=1000).elements}
    assert a == b


def test_wf4_generator_order_independent(wf4_group):
    g = closure(list(reversed(wf4_generators())), cap=2000)
    assert {x.key() for x in g.elements} == {x.key() for x in wf4_group.elements}


@pytest.mark.parametrize("name", ["unit24", "wf4_group", "pure512"])
def test_group_invariants(name, request):
    g = request.getfixturevalue(name)
    assert g.identity() in g
    for x in g.elements:
        assert x.T in g
    for x in g.elements[:50]:
        for s in g.generators:
            assert x @ s in g


# -- element orders -----------------------------------------------------------

def test_unit24_element_orders(unit24):
    orders = element_orders(unit24)
    assert orders == Counter({1: 1, 2: 1, 3: 8, 4: 6, 6: 8})
    assert all(24 % k == 0 for k in orders)


def test_identity_order():
    assert element_order(DyadicMatrix.identity(16)) == 1


def test_pure512_contains_single_minus_identity(pure512):
    minus = -DyadicMatrix.identity(16)
    assert sum(1 for x in pure512.elements if x == minus) == 1
    for g in pure_tensor_generators():
        assert g @ g == minus


# -- conjugacy classes --------------------------------------------------------

def test_unit24_classes_against_brute_force(unit24):
    c = conjugacy_classes(unit24)
    assert c.class_count == 7
    assert sorted(c.class_sizes) == brute_classes(unit24)


def test_pure512_classes(pure512):
    c = conjugacy_classes(pure512)
    assert c.class_count == 257
    assert sum(c.class_sizes) == 512
    assert all(512 % s == 0 for s in c.class_sizes)
    assert sorted(c.class_sizes) == sp_classes(list(sp_closure([to_signed(g) for g in pure_tensor_generators()])))


def test_wf4_class_equation(wf4_group):
    c = conjugacy_classes(wf4_group)
    assert sum(c.class_sizes) == 1152
    assert all(1152 % s == 0 for s in c.class_sizes)
    assert len(c.representatives) == c.class_count


def test_trivial_group_one_class():
    g = closure([DyadicMatrix.identity(3)])
    assert g.order == 1
    assert conjugacy_classes(g).class_count == 1


# -- derived series -----------------------------------------------------------

def test_unit24_derived_series(unit24):
    series = derived_series(unit24)
    assert series == brute_derived_orders(unit24)
    assert series == [24, 8, 2, 1]
    assert is_solvable(unit24)


def test_pure512_derived_series(pure512):
    elems = list(sp_closure([to_signed(g) for g in pure_tensor_generators()]))
    d1 = sp_derived(elems)
    assert commutator_subgroup(pure512).order == len(d1) == 2
    assert derived_series(pure512) == [512, 2, 1]
    assert abelianization_order(pure512) == 256
    assert is_solvable(pure512)


def test_abelian_group_terminates_immediately():
    d = DyadicMatrix.diagonal([-1, 1, 1])
    e = DyadicMatrix.diagonal([1, -1, 1])
    g = closure([d, e])
    assert g.order == 4
    assert derived_series(g) == [4, 1]
    assert abelianization_order(g) == 4


def test_wf4_is_solvable(wf4_group):
    # order 2^7 * 3^2
    assert is_solvable(wf4_group)


# -- character norm -----------------------------------------------------------

def test_pure512_character_norm(pure512):
    assert character_norm(pure512) == 1


def test_character_norm_controls():
    assert character_norm(closure([DyadicMatrix.identity(1)])) == 1
    assert character_norm(closure([DyadicMatrix.identity(2)])) == 4


def test_character_norm_of_unit24_rep(unit24):
    # trace(tau(q)) = 4 Re(q): (2 * 16 + 16 * 4) / 24 = 4, two copies of one 2-dim irrep over C
    oracle = Fraction(sum((2 * q.c0) ** 2 for q in unit_group().elements), 24)
    assert character_norm(unit24) == oracle == 4


def test_dimension_accounting(pure512):
    linear = abelianization_order(pure512)
    classes = conjugacy_classes(pure512).class_count
    assert classes - linear == 1
    assert linear * 1 + 16 ** 2 == 512
