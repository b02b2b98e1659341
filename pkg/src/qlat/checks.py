"""Registry of verification checks and the report they produce."""
from __future__ import annotations

import itertools
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import lru_cache
from typing import Callable

from . import __version__
from .exact import DyadicMatrix
from .groups import (FiniteMatrixGroup, abelianization_order, character_norm, closure,
                     conjugacy_classes, derived_series)
from .lattices import (ShortVectorSet, bw16_lattice, f4_lattice, is_automorphism, match_scale,
                       same_lattice, shortest_vectors, span_from_vectors)
from .perm import (BSGS, action_on_short_vectors, factorize, format_factorization,
                   schreier_sims)
from .quaternions import I, J, OMEGA, phi_inverse, tau, unit_group
from .tensor import (cross_check_fact1, fact1_matrices, pure_tensor_generators, rho2_coordinates,
                     slot_matrix, wf4_generators)

log = logging.getLogger(__name__)

FACT1_ORDER = 89181388800


class UnknownCheck(KeyError):
    pass


@dataclass
class CheckResult:
    name: str
    status: str  # pass | fail | error
    expected: str
    actual: str
    seconds: float
    detail: str = ""
    citation: str = ""

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in ("name", "status", "expected", "actual", "seconds")}


@dataclass
class VerificationReport:
    version: str
    timestamp: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "timestamp": self.timestamp,
            "checks": [c.to_json() for c in self.checks],
            "overall": self.overall,
        }

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"[{c.status.upper():5}] {c.name:20} expected {c.expected!r}, got {c.actual!r} ({c.seconds:.2f}s)"
            lines.append(line)
            if c.detail:
                lines.append(f"        {c.detail}")
            if c.citation:
                lines.append(f"        claim: {c.citation}")
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'} ({len(self.checks)} checks)")
        return "\n".join(lines)


# -- shared, cached computations ---------------------------------------------

@lru_cache(maxsize=None)
def unit_group_matrices() -> FiniteMatrixGroup:
    return closure([tau(I), tau(J), tau(OMEGA)], cap=100)


@lru_cache(maxsize=None)
def wf4_group() -> FiniteMatrixGroup:
    return closure(wf4_generators(), cap=2000)


@lru_cache(maxsize=None)
def pure512_group() -> FiniteMatrixGroup:
    return closure(pure_tensor_generators(), cap=1000)


@lru_cache(maxsize=None)
def bw16_shell() -> ShortVectorSet:
    return shortest_vectors(bw16_lattice())


GROUP_GENERATORS: dict[str, Callable[[], list[DyadicMatrix]]] = {
    "fact1": fact1_matrices,
    "wf4": wf4_generators,
    "pure512": pure_tensor_generators,
}


def group_bsgs(name: str) -> BSGS:
    """BSGS for one of the named 16-dim groups acting on the BW16 minimal shell."""
    gens = GROUP_GENERATORS[name]()
    perms = action_on_short_vectors(gens, bw16_shell())
    return schreier_sims(perms)


def wf4_coordinate_vectors() -> DyadicMatrix:
    rows = [rho2_coordinates(g).coords for g in wf4_group().elements]
    return DyadicMatrix.from_rows(rows)


# -- the checks ----------------------------------------------------------------
# each returns (expected, actual, detail)

def _unit24():
    g = unit_group_matrices()
    invol = sum(1 for x in g.elements if x != g.identity() and (x @ x).is_identity())
    # a bare order only when the 2·A4 structure also holds
    problems = [p for p, bad in (("abelian", g.is_abelian()), (f"{invol} involutions", invol != 1)) if bad]
    actual = str(g.order) + (f" ({', '.join(problems)})" if problems else "")
    return "24", actual, f"non-abelian: {not g.is_abelian()}, involutions: {invol}"


def _f4_kissing():
    s = shortest_vectors(f4_lattice())
    return "24", str(s.count), f"minimal norm {s.norm}"


def _f4_span():
    vecs = [phi_inverse(u) for u in unit_group().elements]
    ok = same_lattice(span_from_vectors(vecs), f4_lattice())
    return "equal", "equal" if ok else "different", "HNF of 24 unit coordinates vs printed F4 basis"


def _wf4_order():
    return "1152", str(wf4_group().order), ""


def _bw16_kissing():
    s = bw16_shell()
    return "4320", str(s.count), f"minimal norm {s.norm}"


def _bw16_span_scale():
    span = span_from_vectors(wf4_coordinate_vectors())
    c = match_scale(span, bw16_lattice(), (1, 2))
    return "match", "match" if c is not None else "no match", f"scale c = {c}"


def _pure512_order():
    return "512", str(pure512_group().order), ""


def _pure512_classes():
    return "257", str(conjugacy_classes(pure512_group()).class_count), ""


def _pure512_solvable():
    g = pure512_group()
    series = derived_series(g)
    ab = abelianization_order(g)
    desc = lambda solv, a: f"{'solvable' if solv else 'not solvable'}, |G/[G,G]| = {a}"
    return desc(True, 256), desc(series[-1] == 1, ab), f"derived series orders {series}"


def _pure512_irrep():
    return "1", str(character_norm(pure512_group())), "exact (1/|G|) sum trace(g)^2"


def rank4_relations() -> tuple[int, int]:
    """(relations holding, relations checked): cross-slot commutation and squares."""
    minus_i = -DyadicMatrix.identity(16)
    ok = total = 0
    for s, t in itertools.combinations((1, 2, 3, 4), 2):
        for y, z in itertools.product("ijk", repeat=2):
            a, b = slot_matrix(s, y), slot_matrix(t, z)
            total += 1
            ok += (a @ b == b @ a)
    for s in (1, 2, 3, 4):
        for y in "ijk":
            m = slot_matrix(s, y)
            total += 1
            ok += (m @ m == minus_i)
    return ok, total


def _rank4_relations():
    ok, total = rank4_relations()
    return f"{total}/{total} hold", f"{ok}/{total} hold", "54 cross-slot commutations, 12 squares = -I"


def _fact1_crosscheck():
    res = cross_check_fact1()
    matched = [r.name for r in res if r.match]
    mism = [f"{r.name} ({len(r.mismatches)} entries)" for r in res if not r.match]
    detail = f"match: {' '.join(matched) or 'none'}; mismatch: {', '.join(mism) or 'none'}"
    return "7 compared", f"{len(res)} compared", detail


def _fact1_automorphism():
    lat = bw16_lattice()
    good = sum(1 for g in fact1_matrices() if g.is_orthogonal() and is_automorphism(lat, g))
    return "7/7 preserve", f"{good}/7 preserve", "orthogonal, g and g^T map the basis into the lattice"


def _fact1_order():
    b = group_bsgs("fact1")
    detail = (f"{b.order} = {format_factorization(factorize(b.order))}; "
              f"base length {len(b.base)}, orbit sizes {b.orbit_sizes}")
    return str(FACT1_ORDER), str(b.order), detail


@dataclass(frozen=True)
class Check:
    name: str
    citation: str
    run: Callable[[], tuple[str, str, str]]


REGISTRY: dict[str, Check] = {c.name: c for c in [
    Check("unit24", "<i,j,k,omega> is isomorphic to 2·A4 of order 24", _unit24),
    Check("f4-kissing", "kissing number of the F4 lattice is 24", _f4_kissing),
    Check("f4-span", "unit group elements transfer to the root system F4 lattice", _f4_span),
    Check("wf4-order", "W(F4) order 1152 = 24 x 24 x 2", _wf4_order),
    Check("bw16-kissing", "Barnes-Wall kissing number is 4320", _bw16_kissing),
    Check("bw16-span-scale", "W(F4) forms a Barnes-Wall lattice", _bw16_span_scale),
    Check("pure512-order", "pure tensors generate a solvable group of order 2·4^4", _pure512_order),
    Check("pure512-classes", "that group has 257 conjugacy classes", _pure512_classes),
    Check("pure512-solvable", "that group is solvable", _pure512_solvable),
    Check("pure512-irrep", "the 16-dim representation is irreducible", _pure512_irrep),
    Check("rank4-relations", "cross-slot commutation and squares equal -rho(e⊗e⊗e⊗e)", _rank4_relations),
    Check("fact1-crosscheck", "rho(x_i) as printed vs the tensor expressions of x_i", _fact1_crosscheck),
    Check("fact1-automorphism", "each rho(x_i) is an automorphism of the Barnes-Wall lattice", _fact1_automorphism),
    Check("fact1-order", "<x1..x7> has order 89181388800 = 2^21·3^5·5^2·7", _fact1_order),
]}


def run_check(name: str) -> CheckResult:
    check = REGISTRY[name]
    t0 = time.perf_counter()
    log.info("running %s", name)
    try:
        expected, actual, detail = check.run()
        status = "pass" if expected == actual else "fail"
    except Exception as exc:  # reported, not raised: one broken check must not hide the rest
        log.exception("check %s raised", name)
        expected, actual, detail, status = "", f"{type(exc).__name__}: {exc}", "", "error"
    seconds = round(time.perf_counter() - t0, 3)
    log.info("%s: %s (%.2fs)", name, status, seconds)
    return CheckResult(name, status, expected, actual, seconds, detail, check.citation)


def resolve_selection(selection) -> list[str]:
    names = list(selection)
    if names == ["all"]:
        return list(REGISTRY)
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        raise UnknownCheck(", ".join(unknown))
    # registry order, duplicates dropped
    return [n for n in REGISTRY if n in names]


def run_checks(selection, threads: int = 1) -> VerificationReport:
    names = resolve_selection(selection)
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    if threads > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(names))) as pool:
            results = list(pool.map(run_check, names))
    else:
        results = [run_check(n) for n in names]
    return VerificationReport(__version__, stamp, results)


def emit_json(report: VerificationReport, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_json(), fh, indent=2)
        fh.write("\n")
