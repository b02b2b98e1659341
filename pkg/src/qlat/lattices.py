"""Exact lattices over Z[1/2] with basis vectors stored as rows."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from . import _tables
from .exact import Dyadic, DyadicMatrix, IntMatrix, det, hnf, solve_rows
from .quaternions import _table_matrix


class Lattice:
    """Full-rank lattice spanned by the rows of ``basis``."""

    def __init__(self, basis: DyadicMatrix):
        if basis.rows != basis.cols:
            raise ValueError("basis must be square")
        self.basis = basis
        self.dim = basis.rows
        self.gram = basis @ basis.T
        if det(basis) == 0:
            raise ValueError("basis is not full rank")

    def __repr__(self):
        return f"Lattice(dim={self.dim})"

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return same_lattice(self, other)

    def __hash__(self):
        e = self.basis.exponent
        return hash((self.dim, e, hnf(self.basis.numerators.tolist()).data))

    @cached_property
    def _inverse(self) -> tuple[np.ndarray, int]:
        """Integer matrix N and denominator D with basis^-1 == N / D."""
        inv = solve_rows(self.basis, DyadicMatrix.identity(self.dim))
        d = math.lcm(*(x.denominator for r in inv for x in r))
        num = np.array([[int(x * d) for x in r] for r in inv], dtype=object)
        return num, d

    def coefficients(self, vectors: DyadicMatrix) -> list[list[Fraction]]:
        """Rational coefficients of each row of ``vectors`` in the basis."""
        num, d = self._inverse
        scaled = vectors.numerators.dot(num)
        den = d << vectors.exponent
        return [[Fraction(int(x), den) for x in r] for r in scaled]

    def contains_rows(self, vectors: DyadicMatrix) -> bool:
        if vectors.cols != self.dim:
            raise ValueError("vector length does not match lattice dimension")
        num, d = self._inverse
        scaled = vectors.numerators.dot(num)
        den = d << vectors.exponent
        return all(int(x) % den == 0 for x in scaled.flat)

    def norm(self, v: Sequence) -> Dyadic:
        total = Dyadic(0)
        for x in v:
            x = Dyadic.coerce(x)
            total = total + x * x
        return total


def _vector(v) -> DyadicMatrix:
    if isinstance(v, DyadicMatrix):
        return v if v.rows == 1 else v.T
    return DyadicMatrix.from_rows([list(v)])


def member(l: Lattice, v) -> bool:
    """True iff v is an integer combination of the basis rows."""
    return l.contains_rows(_vector(v))


@dataclass(frozen=True)
class ShortVectorSet:
    norm: Dyadic
    vectors: DyadicMatrix  # one vector per row, canonically sorted

    @property
    def count(self) -> int:
        return self.vectors.rows

    def __len__(self):
        return self.count

    def rows(self):
        for i in range(self.vectors.rows):
            yield self.vectors.row(i)


def _enumerate(gram: np.ndarray, bound: float, visit) -> None:
    """Fincke-Pohst depth-first search over x with x^T G x <= bound.

    ``visit(x)`` is called for every candidate and returns a (possibly smaller)
    new bound.  Float pruning only; callers re-verify exactly.
    """
    n = len(gram)
    L = np.linalg.cholesky(gram)
    Q = L.T
    d2 = np.diag(Q) ** 2
    mu = Q / np.diag(Q)[:, None]
    x = [0] * n
    state = {"bound": bound}
    eps = 1e-9

    def rec(i: int, used: float):
        c = -sum(mu[i, j] * x[j] for j in range(i + 1, n))
        rem = state["bound"] * (1 + eps) + eps - used
        if rem < 0:
            return
        r = math.sqrt(rem / d2[i])
        lo, hi = math.ceil(c - r), math.floor(c + r)
        # nearest-to-centre first so the bound tightens early
        cands = sorted(range(lo, hi + 1), key=lambda t: (abs(t - c), t))
        for xi in cands:
            x[i] = xi
            t = used + d2[i] * (xi - c) ** 2
            if t > state["bound"] * (1 + eps) + eps:
                continue
            if i == 0:
                state["bound"] = visit(x)
            else:
                rec(i - 1, t)
        x[i] = 0

    rec(n - 1, 0.0)


def shortest_vectors(l: Lattice) -> ShortVectorSet:
    """All nonzero lattice vectors of minimal norm.

    The search bound starts at the smallest diagonal Gram entry and shrinks
    whenever a strictly shorter vector is verified.
    """
    gram_exact = l.gram.to_fractions()
    gram = np.array([[float(x) for x in r] for r in gram_exact])
    gnum = np.array([[int(x) for x in r] for r in l.gram.numerators], dtype=object)
    gden = 1 << l.gram.exponent
    best = [min(gram_exact[i][i] for i in range(l.dim))]
    found: dict[tuple, None] = {}

    def visit(x):
        if not any(x):
            return float(best[0])
        xv = np.array(x, dtype=object)
        q = Fraction(int(xv.dot(gnum).dot(xv)), gden)
        if q < best[0]:
            best[0] = q
            found.clear()
        if q == best[0]:
            found[tuple(x)] = None
        return float(best[0])

    _enumerate(gram, float(best[0]), visit)
    coeffs = np.array(list(found), dtype=object)
    vecs = coeffs.dot(l.basis.numerators)
    rows = sorted(tuple(int(t) for t in r) for r in vecs)
    # common denominator, so integer order is value order
    vm = DyadicMatrix(np.array(rows, dtype=object), l.basis.exponent)
    return ShortVectorSet(Dyadic.coerce(best[0]), vm)


def kissing_number(l: Lattice) -> int:
    return shortest_vectors(l).count


def is_automorphism(l: Lattice, g: DyadicMatrix) -> bool:
    """True iff g maps the lattice onto itself (g and g^T both preserve it)."""
    if g.shape != (l.dim, l.dim):
        raise ValueError("dimension mismatch")
    if not g.is_orthogonal():
        raise ValueError("automorphism candidates must be orthogonal")
    # row vector b goes to (g b^T)^T = b g^T
    return l.contains_rows(l.basis @ g.T) and l.contains_rows(l.basis @ g)


def span_from_vectors(vectors) -> Lattice:
    """Lattice spanned over Z by the given vectors, with an HNF basis."""
    vm = vectors if isinstance(vectors, DyadicMatrix) else DyadicMatrix.from_rows(vectors)
    h = hnf(vm.numerators.tolist())
    if h.rows < vm.cols:
        raise ValueError(f"vectors span rank {h.rows} < {vm.cols}")
    return Lattice(DyadicMatrix(np.array(h.tolist(), dtype=object), vm.exponent))


def lattice_hnf(l: Lattice, exponent: int) -> IntMatrix:
    """HNF of the basis scaled by 2**exponent (must clear all denominators)."""
    if exponent < l.basis.exponent:
        raise ValueError("exponent too small to clear denominators")
    return hnf((l.basis.numerators * (1 << (exponent - l.basis.exponent))).tolist())


def same_lattice(a: Lattice, b: Lattice) -> bool:
    if a.dim != b.dim:
        return False
    e = max(a.basis.exponent, b.basis.exponent)
    return lattice_hnf(a, e) == lattice_hnf(b, e)


def scaled(l: Lattice, c) -> Lattice:
    return Lattice(l.basis.scale(c))


def match_scale(l: Lattice, reference: Lattice, candidates=(1, 2)):
    """First c in ``candidates`` with l == c * reference, else None."""
    for c in candidates:
        if same_lattice(l, scaled(reference, c)):
            return c
    return None


def f4_lattice() -> Lattice:
    return Lattice(_table_matrix(_tables.F4_BASIS))


def bw16_lattice() -> Lattice:
    return Lattice(_table_matrix(_tables.BW16_BASIS))


LATTICES = {"f4": f4_lattice, "bw16": bw16_lattice}
