"""One test per acceptance criterion, each timed against its limit.

Caches are cleared first so every timing includes the work it depends on.
Run ``pytest tests/test_acceptance.py`` to see the PASS/FAIL summary.
"""
import time

import test_exact
import test_lattices
import test_perm
import test_quaternions
from qlat import checks, quaternions, tensor
from qlat.groups import (abelianization_order, character_norm, closure, conjugacy_classes,
                         derived_series)
from qlat.lattices import f4_lattice, shortest_vectors
from qlat.perm import action_on_short_vectors, factorize, format_factorization, schreier_sims
from qlat.quaternions import I, J, OMEGA, tau


def cold():
    for f in (checks.unit_group_matrices, checks.wf4_group, checks.pure512_group, checks.bw16_shell,
              quaternions.tau_generators, tensor._rho2_word, tensor.rho4_basis, tensor.slot_matrix,
              tensor.rho4_word, tensor.fact1_generators):
        f.cache_clear()


def timed(fn):
    cold()
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def run_registered(name):
    expected, actual, detail = checks.REGISTRY[name].run()
    return expected, actual, detail


def test_ac01_unit24(acceptance):
    def work():
        g = closure([tau(I), tau(J), tau(OMEGA)], cap=100)
        invol = sum(1 for x in g.elements if x != g.identity() and (x @ x).is_identity())
        return g.order, g.is_abelian(), invol
    (order, abelian, invol), sec = timed(work)
    ok = (order, abelian, invol) == (24, False, 1)
    assert acceptance(1, "unit24", ok, sec, 1, f"order {order}, abelian {abelian}, involutions {invol}")


def test_ac02_f4_kissing(acceptance):
    s, sec = timed(lambda: shortest_vectors(f4_lattice()))
    assert acceptance(2, "f4-kissing", s.count == 24, sec, 1, f"{s.count} vectors of norm {s.norm}")


def test_ac03_f4_span(acceptance):
    (exp, act, _), sec = timed(lambda: run_registered("f4-span"))
    assert acceptance(3, "f4-span", exp == act == "equal", sec, 1, act)


def test_ac04_wf4_order(acceptance):
    g, sec = timed(checks.wf4_group)
    assert acceptance(4, "wf4-order", g.order == 1152, sec, 10, f"order {g.order}")


def test_ac05_bw16_kissing(acceptance):
    s, sec = timed(checks.bw16_shell)
    assert acceptance(5, "bw16-kissing", s.count == 4320, sec, 60, f"{s.count} vectors of norm {s.norm}")


def test_ac06_bw16_span_scale(acceptance):
    (exp, act, detail), sec = timed(lambda: run_registered("bw16-span-scale"))
    assert acceptance(6, "bw16-span-scale", exp == act == "match", sec, 10, detail)


def test_ac07_pure512(acceptance):
    def work():
        g = checks.pure512_group()
        return (g.order, derived_series(g), conjugacy_classes(g).class_count,
                abelianization_order(g), character_norm(g))
    (order, series, classes, ab, norm), sec = timed(work)
    ok = order == 512 and series[-1] == 1 and classes == 257 and ab == 256 and norm == 1
    detail = f"order {order}, derived {series}, classes {classes}, |G/G'| {ab}, norm {norm}"
    assert acceptance(7, "pure512", ok, sec, 30, detail)


def test_ac08_rank4_relations(acceptance):
    (ok, total), sec = timed(checks.rank4_relations)
    assert acceptance(8, "rank4-relations", ok == total == 66, sec, 1, f"{ok}/{total} hold")


def test_ac09_fact1_automorphism(acceptance):
    (exp, act, _), sec = timed(lambda: run_registered("fact1-automorphism"))
    assert acceptance(9, "fact1-automorphism", exp == act == "7/7 preserve", sec, 1, act)


def test_ac10_fact1_order(acceptance):
    b, sec = timed(lambda: checks.group_bsgs("fact1"))
    fact = format_factorization(factorize(b.order))
    ok = b.order == 89181388800 and factorize(b.order) == [(2, 21), (3, 5), (5, 2), (7, 1)]
    assert acceptance(10, "fact1-order", ok, sec, 600, f"{b.order} = {fact}")


def test_ac11_cross_validation(acceptance):
    def work():
        unit = closure([tau(I), tau(J), tau(OMEGA)], cap=100)
        f4_shell = shortest_vectors(f4_lattice())
        pairs = [(unit.order, schreier_sims(action_on_short_vectors(unit.generators, f4_shell)).order)]
        for name, group in (("pure512", checks.pure512_group), ("wf4", checks.wf4_group)):
            pairs.append((group().order, checks.group_bsgs(name).order))
        return pairs
    pairs, sec = timed(work)
    ok = pairs == [(24, 24), (512, 512), (1152, 1152)]
    assert acceptance(11, "cross-validation", ok, sec, 30,
                      ", ".join(f"closure {a} / bsgs {b}" for a, b in pairs))


def test_ac12_fact1_crosscheck(acceptance):
    res, sec = timed(tensor.cross_check_fact1)
    complete = [r.name for r in res] == [f"x{n}" for n in range(1, 8)]
    matched = " ".join(r.name for r in res if r.match) or "none"
    assert acceptance(12, "fact1-crosscheck", complete, sec, 5, f"report complete; match: {matched}")


PROPERTY_SUITES = [
    ("kronecker mixed product", test_exact.test_kron_mixed_product),
    ("hnf idempotence/span", test_exact.test_hnf_shape_idempotence_and_span),
    ("quaternion associativity", test_quaternions.test_associativity),
    ("norm multiplicativity", test_quaternions.test_norm_multiplicative),
    ("shortest-vector oracle", test_lattices.test_shortest_vectors_match_brute_force),
    ("bsgs base invariance", test_perm.test_order_independent_of_base_and_generator_order),
]


def test_ac13_property_suites(acceptance):
    t0 = time.perf_counter()
    failures = []
    for name, fn in PROPERTY_SUITES:
        if fn._hypothesis_internal_use_settings.max_examples < 100:
            failures.append(f"{name}: fewer than 100 cases")
            continue
        try:
            fn()
        except Exception as exc:  # collected so every suite is reported
            failures.append(f"{name}: {type(exc).__name__}")
    sec = time.perf_counter() - t0
    detail = f"{len(PROPERTY_SUITES) - len(failures)}/{len(PROPERTY_SUITES)} suites, >= 100 cases each"
    if failures:
        detail += "; failed: " + ", ".join(failures)
    assert acceptance(13, "property-suites", not failures, sec, None, detail)
