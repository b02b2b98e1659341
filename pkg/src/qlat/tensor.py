"""Tensor powers of the quaternions and their 16-dimensional representations.

Coordinates of a rank-r element are indexed by factor words over (e, i, j, k)
in lexicographic order, slot 1 most significant.

The rank-2 representation is ``kron(tau(left), tau(right))``.  The rank-4
representation is *not* a Kronecker product (that would be 256-dimensional);
it is fixed by eight stored 16x16 slot matrices, one per (slot, i|j), with
``k`` in a slot realized as the product of that slot's i and j matrices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from . import _tables
from .exact import Dyadic, DyadicMatrix, kron
from .quaternions import _table_matrix, tau_generators

SYMBOLS = "eijk"
RANKS = (1, 2, 4)

# unit products: (a, b) -> (sign, a*b)
_UNIT_PRODUCT = {
    ("e", "e"): (1, "e"), ("e", "i"): (1, "i"), ("e", "j"): (1, "j"), ("e", "k"): (1, "k"),
    ("i", "e"): (1, "i"), ("i", "i"): (-1, "e"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "e"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "e"), ("j", "k"): (1, "i"),
    ("k", "e"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "e"),
}


def word_index(factors: str) -> int:
    idx = 0
    for s in factors:
        idx = idx * 4 + SYMBOLS.index(s)
    return idx


def index_word(idx: int, rank: int) -> str:
    out = []
    for _ in range(rank):
        idx, d = divmod(idx, 4)
        out.append(SYMBOLS[d])
    return "".join(reversed(out))


@dataclass(frozen=True)
class TensorWord:
    """A signed pure tensor such as ``-(i ⊗ j ⊗ k ⊗ i)``."""

    rank: int
    sign: int
    factors: str

    def __post_init__(self):
        if self.rank not in RANKS:
            raise ValueError(f"rank must be one of {RANKS}")
        if len(self.factors) != self.rank or any(s not in SYMBOLS for s in self.factors):
            raise ValueError(f"bad factors {self.factors!r} for rank {self.rank}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def parse(cls, text: str) -> TensorWord:
        """Accepts ``"ijki"``, ``"-i⊗j⊗k⊗i"`` or ``"- i x j x k x i"``."""
        t = text.replace("⊗", "").replace("x", "").replace(" ", "")
        sign = 1
        if t[:1] in "+-":
            sign = -1 if t[0] == "-" else 1
            t = t[1:]
        return cls(len(t), sign, t)

    def __mul__(self, other: TensorWord) -> TensorWord:
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        sign = self.sign * other.sign
        out = []
        for a, b in zip(self.factors, other.factors):
            s, c = _UNIT_PRODUCT[(a, b)]
            sign *= s
            out.append(c)
        return TensorWord(self.rank, sign, "".join(out))

    def to_element(self) -> AlgebraElement:
        return AlgebraElement.from_terms(self.rank, [(self.sign, self.factors)])

    def __str__(self):
        return ("-" if self.sign < 0 else "") + "⊗".join(self.factors)


@dataclass(frozen=True)
class AlgebraElement:
    rank: int
    coords: tuple[Dyadic, ...]

    def __post_init__(self):
        if self.rank not in RANKS:
            raise ValueError(f"rank must be one of {RANKS}")
        coords = tuple(Dyadic.coerce(c) for c in self.coords)
        if len(coords) != 4 ** self.rank:
            raise ValueError(f"expected {4 ** self.rank} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, rank: int) -> AlgebraElement:
        return cls(rank, (Dyadic(0),) * 4 ** rank)

    @classmethod
    def unit(cls, rank: int) -> AlgebraElement:
        return TensorWord(rank, 1, "e" * rank).to_element()

    @classmethod
    def from_terms(cls, rank: int, terms: Iterable[tuple[int, str]], scale=1) -> AlgebraElement:
        """``scale * sum(sign * word)``; words are strings like ``"ijki"``."""
        scale = Dyadic.coerce(scale)
        coords = [Dyadic(0)] * 4 ** rank
        for sign, word in terms:
            if len(word) != rank:
                raise ValueError(f"word {word!r} does not have rank {rank}")
            i = word_index(word)
            coords[i] = coords[i] + scale * sign
        return cls(rank, tuple(coords))

    def terms(self) -> dict[str, Dyadic]:
        """Nonzero coordinates keyed by factor word."""
        return {index_word(i, self.rank): c for i, c in enumerate(self.coords) if c != 0}

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return algebra_mul(self, other)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return AlgebraElement(self.rank, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __str__(self):
        t = self.terms()
        if not t:
            return "0"
        return " + ".join(f"{c}·{'⊗'.join(w)}" for w, c in t.items())


def algebra_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the factor-wise product of pure tensors."""
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    rank = a.rank
    acc: dict[str, Dyadic] = {}
    ta, tb = a.terms(), b.terms()
    for wa, ca in ta.items():
        for wb, cb in tb.items():
            sign = 1
            out = []
            for x, y in zip(wa, wb):
                s, z = _UNIT_PRODUCT[(x, y)]
                sign *= s
                out.append(z)
            w = "".join(out)
            acc[w] = acc.get(w, Dyadic(0)) + ca * cb * sign
    coords = [Dyadic(0)] * 4 ** rank
    for w, c in acc.items():
        coords[word_index(w)] = c
    return AlgebraElement(rank, tuple(coords))


def _linear(rank: int, w: AlgebraElement, word_matrix) -> DyadicMatrix:
    if w.rank != rank:
        raise ValueError(f"expected a rank-{rank} element, got rank {w.rank}")
    out = None
    for word, c in w.terms().items():
        term = word_matrix(word).scale(c)
        out = term if out is None else out + term
    if out is None:
        n = word_matrix("e" * rank).rows
        return DyadicMatrix.from_ints([[0] * n] * n)
    return out


def rho1(w: AlgebraElement) -> DyadicMatrix:
    t = tau_generators()
    return _linear(1, w, lambda word: t[word])


@lru_cache(maxsize=None)
def _rho2_word(word: str) -> DyadicMatrix:
    t = tau_generators()
    return kron(t[word[0]], t[word[1]])


def rho2(w: AlgebraElement) -> DyadicMatrix:
    return _linear(2, w, _rho2_word)


_BASIS_TABLES = {
    (1, "i"): _tables.RHO4_I1, (1, "j"): _tables.RHO4_J1,
    (2, "i"): _tables.RHO4_I2, (2, "j"): _tables.RHO4_J2,
    (3, "i"): _tables.RHO4_I3, (3, "j"): _tables.RHO4_J3,
    (4, "i"): _tables.RHO4_I4, (4, "j"): _tables.RHO4_J4,
}


@lru_cache(maxsize=None)
def rho4_basis(slot: int, symbol: str) -> DyadicMatrix:
    """Stored 16x16 image of the pure tensor with ``symbol`` in ``slot`` (1..4) and e elsewhere."""
    try:
        return _table_matrix(_BASIS_TABLES[(slot, symbol)])
    except KeyError:
        raise ValueError(f"no stored matrix for slot {slot!r}, symbol {symbol!r}") from None


@lru_cache(maxsize=None)
def slot_matrix(slot: int, symbol: str) -> DyadicMatrix:
    if symbol == "e":
        return DyadicMatrix.identity(16)
    if symbol == "k":
        return rho4_basis(slot, "i") @ rho4_basis(slot, "j")
    return rho4_basis(slot, symbol)


@lru_cache(maxsize=None)
def rho4_word(word: str, order: tuple[int, ...] = (1, 2, 3, 4)) -> DyadicMatrix:
    """Image of a pure rank-4 word: product of slot matrices in the given slot order."""
    m = DyadicMatrix.identity(16)
    for slot in order:
        sym = word[slot - 1]
        if sym != "e":
            m = m @ slot_matrix(slot, sym)
    return m


def rho4(w: AlgebraElement) -> DyadicMatrix:
    return _linear(4, w, rho4_word)


HALF = Dyadic(1, 1)

WF4_EXPRESSIONS = {
    "e1": [(1, "ee"), (1, "ij"), (1, "jk"), (-1, "ki")],
    "e2": [(1, "ee"), (-1, "ii"), (-1, "jj"), (-1, "kk")],
    "e3": [(1, "ee"), (-1, "ii"), (-1, "jk"), (1, "kj")],
    "e4": [(1, "ee"), (-1, "ij"), (-1, "ji"), (1, "kk")],
}

FACT1_EXPRESSIONS = {
    "x1": [(1, "eeee"), (1, "ijki"), (1, "jkik"), (1, "kijj")],
    "x2": [(1, "eeee"), (1, "iiki"), (1, "jkik"), (-1, "kjjj")],
    "x3": [(1, "eeee"), (1, "jjii"), (1, "ikkk"), (1, "kijj")],
    "x4": [(1, "eeee"), (1, "kjik"), (1, "ikkj"), (-1, "jiji")],
    "x5": [(1, "eeee"), (1, "kjkk"), (-1, "ikij"), (-1, "jiji")],
    "x6": [(1, "eeee"), (1, "iiee"), (1, "jkee"), (1, "kjee")],
    "x7": [(1, "eeee"), (1, "jjke"), (1, "ikie"), (1, "kije")],
}


def wf4_element(name: str) -> AlgebraElement:
    return AlgebraElement.from_terms(2, WF4_EXPRESSIONS[name], HALF)


def fact1_element(name: str) -> AlgebraElement:
    return AlgebraElement.from_terms(4, FACT1_EXPRESSIONS[name], HALF)


def wf4_generators() -> list[DyadicMatrix]:
    """rho2(e1), ..., rho2(e4)."""
    return [rho2(wf4_element(n)) for n in WF4_EXPRESSIONS]


def pure_tensor_generators() -> list[DyadicMatrix]:
    """The eight stored slot matrices, slot-major, i before j."""
    return [rho4_basis(s, y) for s in (1, 2, 3, 4) for y in "ij"]


@dataclass(frozen=True)
class RepElement:
    matrix: DyadicMatrix
    source: AlgebraElement | None = None
    name: str = ""

    def __post_init__(self):
        if not self.matrix.is_orthogonal():
            raise ValueError(f"{self.name or 'matrix'} is not orthogonal")


@lru_cache(maxsize=None)
def fact1_generators() -> tuple[RepElement, ...]:
    """rho(x1)..rho(x7) from the stored tables; these matrices are authoritative."""
    return tuple(
        RepElement(_table_matrix(getattr(_tables, f"RHO_X{n}")), fact1_element(f"x{n}"), f"x{n}")
        for n in range(1, 8)
    )


def fact1_matrices() -> list[DyadicMatrix]:
    return [g.matrix for g in fact1_generators()]


@dataclass
class CrossCheck:
    name: str
    match: bool
    # (row, col, printed value, value from the tensor expression)
    mismatches: list[tuple[int, int, Dyadic, Dyadic]] = field(default_factory=list)


def compare_matrices(name: str, printed: DyadicMatrix, computed: DyadicMatrix) -> CrossCheck:
    diffs = [
        (r, c, printed[r, c], computed[r, c])
        for r, c in itertools.product(range(printed.rows), range(printed.cols))
        if printed[r, c] != computed[r, c]
    ]
    return CrossCheck(name, not diffs, diffs)


def cross_check_fact1() -> list[CrossCheck]:
    """Compare rho4 of each tensor expression against its printed matrix."""
    return [
        compare_matrices(g.name, g.matrix, rho4(g.source)) for g in fact1_generators()
    ]


def rho2_coordinates(m: DyadicMatrix) -> AlgebraElement:
    """Preimage of ``m`` under rho2, via the trace form.

    The 16 matrices kron(tau(a), tau(b)) are orthogonal with
    trace(X^T Y) = 16 * [X == Y], so each coordinate is a scaled trace.
    Raises if ``m`` is not in the image.
    """
    coords = []
    for idx in range(16):
        b = _rho2_word(index_word(idx, 2))
        t = Dyadic(int((b.numerators * m.numerators).sum()), b.exponent + m.exponent)
        coords.append(t * Dyadic(1, 4))
    w = AlgebraElement(2, tuple(coords))
    if rho2(w) != m:
        raise ValueError("matrix is not in the image of rho2")
    return w
