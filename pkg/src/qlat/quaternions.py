"""Hurwitz quaternions, the unit group <i, j, k, omega>, and the 4x4 representation tau."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from . import _tables
from .exact import Dyadic, DyadicMatrix


@dataclass(frozen=True, order=True)
class HurwitzQuaternion:
    """``(c0 + c1 i + c2 j + c3 k) / 2`` with c0..c3 integers of equal parity."""

    c0: int
    c1: int
    c2: int
    c3: int

    def __post_init__(self):
        if not (self.c0 % 2 == self.c1 % 2 == self.c2 % 2 == self.c3 % 2):
            raise ValueError(f"doubled coordinates must share parity: {self.coords}")

    @classmethod
    def from_coords(cls, a, b, c, d) -> HurwitzQuaternion:
        """From ordinary coordinates (ints, halves, Dyadic or Fraction)."""
        doubled = []
        for x in (a, b, c, d):
            v = Dyadic.coerce(x) * 2
            if v.exponent:
                raise ValueError(f"coordinate {x} is not in Z or Z + 1/2")
            doubled.append(v.numerator)
        return cls(*doubled)

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __mul__(self, other: HurwitzQuaternion) -> HurwitzQuaternion:
        return quat_mul(self, other)

    def __neg__(self):
        return HurwitzQuaternion(-self.c0, -self.c1, -self.c2, -self.c3)

    def __add__(self, other: HurwitzQuaternion) -> HurwitzQuaternion:
        return HurwitzQuaternion(*(x + y for x, y in zip(self.coords, other.coords)))

    def conj(self) -> HurwitzQuaternion:
        return quat_conj(self)

    def norm(self) -> int:
        return quat_norm(self)

    def __str__(self):
        parts = []
        for c, sym in zip(self.coords, ("", "i", "j", "k")):
            if c == 0:
                continue
            val = Dyadic(c, 1)
            mag = str(abs(val.numerator)) if val.exponent == 0 else f"{abs(val.numerator)}/2"
            if sym and mag == "1":
                mag = ""
            parts.append(("-" if c < 0 else "+") + mag + sym)
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s


def quat_mul(a: HurwitzQuaternion, b: HurwitzQuaternion) -> HurwitzQuaternion:
    a0, a1, a2, a3 = a.coords
    b0, b1, b2, b3 = b.coords
    # Hamilton product of doubled coordinates is 4x the product; halve to re-double.
    p = (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )
    if any(x % 2 for x in p):
        raise ArithmeticError("product left the Hurwitz order")
    return HurwitzQuaternion(*(x // 2 for x in p))


def quat_conj(q: HurwitzQuaternion) -> HurwitzQuaternion:
    return HurwitzQuaternion(q.c0, -q.c1, -q.c2, -q.c3)


def quat_norm(q: HurwitzQuaternion) -> int:
    s = q.c0 ** 2 + q.c1 ** 2 + q.c2 ** 2 + q.c3 ** 2
    if s % 4:
        raise ArithmeticError("norm is not integral")
    return s // 4


def phi_inverse(q: HurwitzQuaternion) -> tuple[Dyadic, Dyadic, Dyadic, Dyadic]:
    """Coordinate vector of q in the basis (e, i, j, k)."""
    return tuple(Dyadic(c, 1) for c in q.coords)


E = HurwitzQuaternion(2, 0, 0, 0)
I = HurwitzQuaternion(0, 2, 0, 0)
J = HurwitzQuaternion(0, 0, 2, 0)
K = HurwitzQuaternion(0, 0, 0, 2)
OMEGA = HurwitzQuaternion(1, 1, 1, 1)

SYMBOLS = {"e": E, "i": I, "j": J, "k": K}


@dataclass
class QuatUnitGroup:
    generators: list[HurwitzQuaternion]
    elements: list[HurwitzQuaternion] = field(default_factory=list)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, q):
        return q in set(self.elements)

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.generators for b in self.generators)

    def involutions(self) -> list[HurwitzQuaternion]:
        return [q for q in self.elements if q != E and q * q == E]


def unit_group(generators=(I, J, K, OMEGA), cap: int = 1000) -> QuatUnitGroup:
    """Breadth-first closure under left multiplication by the generators."""
    gens = list(generators)
    seen = {E}
    order = [E]
    queue = deque([E])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s * g
            if h not in seen:
                seen.add(h)
                order.append(h)
                queue.append(h)
                if len(order) > cap:
                    raise RuntimeError(f"quaternion closure exceeded cap {cap}")
    return QuatUnitGroup(gens, order)


def _table_matrix(table) -> DyadicMatrix:
    den, text = table
    rows = [[int(x) for x in ln.split()] for ln in text.strip().splitlines()]
    return DyadicMatrix.from_ints(rows, den)


@lru_cache(maxsize=None)
def tau_generators() -> dict[str, DyadicMatrix]:
    """tau(e), tau(i), tau(j), tau(k)."""
    return {
        "e": DyadicMatrix.identity(4),
        "i": _table_matrix(_tables.TAU_I),
        "j": _table_matrix(_tables.TAU_J),
        "k": _table_matrix(_tables.TAU_K),
    }


def tau(q: HurwitzQuaternion) -> DyadicMatrix:
    t = tau_generators()
    out = None
    for c, sym in zip(q.coords, "eijk"):
        if c:
            term = t[sym].scale(Dyadic(c, 1))
            out = term if out is None else out + term
    if out is None:
        return DyadicMatrix.from_ints([[0] * 4] * 4)
    return out
