"""Brute-force finite matrix groups: closure, element orders, classes, derived series.

Only meant for the small groups here (orders up to a few thousand).  Elements
are orthogonal, so inverses are transposes.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import Dyadic, DyadicMatrix

log = logging.getLogger(__name__)


class GroupTooLarge(RuntimeError):
    """Closure produced more elements than the allowed cap."""


@dataclass
class FiniteMatrixGroup:
    generators: list[DyadicMatrix]
    elements: list[DyadicMatrix]
    cap: int
    _index: dict = field(default=None, repr=False)

    def __post_init__(self):
        if self._index is None:
            self._index = {g.key(): n for n, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m: DyadicMatrix) -> bool:
        return m.key() in self._index

    def index(self, m: DyadicMatrix) -> int:
        return self._index[m.key()]

    @property
    def dim(self) -> int:
        return self.elements[0].rows

    def identity(self) -> DyadicMatrix:
        return DyadicMatrix.identity(self.dim)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a @ b == b @ a for n, a in enumerate(gens) for b in gens[n + 1:])


@dataclass
class ConjugacyClassing:
    class_count: int
    class_sizes: list[int]
    representatives: list[DyadicMatrix]


def closure(generators: Sequence[DyadicMatrix], cap: int = 5000) -> FiniteMatrixGroup:
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].rows
    for g in gens:
        if g.shape != (n, n):
            raise ValueError("generators must share one square shape")
        if not g.is_orthogonal():
            raise ValueError("generators must be orthogonal")
    ident = DyadicMatrix.identity(n)
    elements = [ident]
    index = {ident.key(): 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g @ s
                k = h.key()
                if k not in index:
                    index[k] = len(elements)
                    elements.append(h)
                    nxt.append(h)
                    if len(elements) > cap:
                        raise GroupTooLarge(f"group larger than cap {cap}")
        frontier = nxt
    log.debug("closure: %d elements", len(elements))
    return FiniteMatrixGroup(gens, elements, cap, index)


def element_order(g: DyadicMatrix, limit: int = 10_000) -> int:
    ident = DyadicMatrix.identity(g.rows)
    h, k = g, 1
    while h != ident:
        h = h @ g
        k += 1
        if k > limit:
            raise ArithmeticError("element order exceeds limit")
    return k


def element_orders(g: FiniteMatrixGroup) -> Counter:
    """Multiset ``{order: count}`` over all elements."""
    return Counter(element_order(x) for x in g.elements)


def conjugacy_classes(g: FiniteMatrixGroup) -> ConjugacyClassing:
    """Orbits of the conjugation action, explored through the generators."""
    gens = [(s, s.T) for s in g.generators]
    assigned = [False] * g.order
    sizes, reps = [], []
    for start, x in enumerate(g.elements):
        if assigned[start]:
            continue
        assigned[start] = True
        orbit = [x]
        stack = [x]
        while stack:
            y = stack.pop()
            for s, s_inv in gens:
                z = s_inv @ y @ s
                i = g.index(z)
                if not assigned[i]:
                    assigned[i] = True
                    orbit.append(z)
                    stack.append(z)
        sizes.append(len(orbit))
        reps.append(x)
    return ConjugacyClassing(len(sizes), sizes, reps)


def _normal_closure(gens: list[DyadicMatrix], within: FiniteMatrixGroup, cap: int) -> FiniteMatrixGroup:
    """Smallest subgroup containing ``gens`` and normalized by ``within``'s generators."""
    ident = within.identity()
    current: list[DyadicMatrix] = []
    h = FiniteMatrixGroup([ident], [ident], cap)
    for g in gens:
        if g not in h:
            current.append(g)
            h = closure(current, cap)
    grown = True
    while grown:
        grown = False
        for s in within.generators:
            for x in current:
                y = s.T @ x @ s
                if y not in h:
                    current.append(y)
                    h = closure(current, cap)
                    grown = True
                    break
            if grown:
                break
    return h


def commutator_subgroup(g: FiniteMatrixGroup) -> FiniteMatrixGroup:
    gens = g.generators
    comms = [a.T @ b.T @ a @ b for a in gens for b in gens]
    return _normal_closure(comms, g, g.cap)


def derived_series(g: FiniteMatrixGroup) -> list[int]:
    """Orders of G, G', G'', ... until the series stabilizes."""
    orders = [g.order]
    while True:
        h = commutator_subgroup(g)
        if h.order == g.order:
            return orders
        orders.append(h.order)
        if h.order == 1:
            return orders
        g = h


def is_solvable(g: FiniteMatrixGroup) -> bool:
    return derived_series(g)[-1] == 1


def abelianization_order(g: FiniteMatrixGroup) -> int:
    return g.order // commutator_subgroup(g).order


def character_norm(g: FiniteMatrixGroup) -> Fraction:
    """(1/|G|) * sum of trace(g)^2; equals 1 for an irreducible real-valued character."""
    total = Dyadic(0)
    for x in g.elements:
        t = x.trace()
        total = total + t * t
    return total.to_fraction() / g.order
