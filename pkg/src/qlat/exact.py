"""Exact arithmetic over the dyadic rationals Z[1/2].

Scalars are ``Dyadic`` values n / 2^e.  Matrices keep a single shared
power-of-two exponent over an integer numerator array, which keeps
canonicalization and hashing cheap.  Matrices act on column vectors;
lattice bases are stored as rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence

import numpy as np


def _two_adic(n: int) -> int:
    """Exponent of the largest power of two dividing n (n != 0)."""
    return (n & -n).bit_length() - 1


@total_ordering
@dataclass(frozen=True, slots=True)
class Dyadic:
    """The number ``numerator / 2**exponent``, always stored canonically."""

    numerator: int
    exponent: int = 0

    def __post_init__(self):
        n, e = int(self.numerator), int(self.exponent)
        if e < 0:
            n, e = n << -e, 0
        if n == 0:
            e = 0
        elif e:
            s = min(_two_adic(n), e)
            n, e = n >> s, e - s
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def coerce(cls, x) -> Dyadic:
        if isinstance(x, Dyadic):
            return x
        if isinstance(x, (int, np.integer)):
            return cls(int(x))
        if isinstance(x, Fraction):
            d = x.denominator
            if d & (d - 1):
                raise ValueError(f"{x} is not a dyadic rational")
            return cls(x.numerator, d.bit_length() - 1)
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Dyadic")

    @classmethod
    def parse(cls, s: str) -> Dyadic:
        """Parse ``"n"`` or ``"n/d"`` where d is a positive power of two."""
        s = s.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            d = int(den)
            if d <= 0 or d & (d - 1):
                raise ValueError(f"denominator of {s!r} is not a positive power of two")
            return cls(int(num), d.bit_length() - 1)
        return cls(int(s))

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __add__(self, other):
        o = Dyadic.coerce(other)
        e = max(self.exponent, o.exponent)
        return Dyadic((self.numerator << (e - self.exponent))
                      + (o.numerator << (e - o.exponent)), e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.numerator, self.exponent)

    def __sub__(self, other):
        return self + (-Dyadic.coerce(other))

    def __rsub__(self, other):
        return Dyadic.coerce(other) - self

    def __mul__(self, other):
        o = Dyadic.coerce(other)
        return Dyadic(self.numerator * o.numerator, self.exponent + o.exponent)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            o = Dyadic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.numerator == o.numerator and self.exponent == o.exponent

    def __lt__(self, other):
        return self.to_fraction() < Dyadic.coerce(other).to_fraction()

    def __hash__(self):
        return hash((self.numerator, self.exponent))

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"

    def __repr__(self):
        return f"Dyadic({self})"


def _as_object_array(rows) -> np.ndarray:
    arr = np.empty((len(rows), len(rows[0]) if len(rows) else 0), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            arr[i, j] = x
    return arr


class DyadicMatrix:
    """Immutable exact matrix with entries in Z[1/2].

    Stored as an integer numerator array over a common denominator
    ``2**exponent`` with the exponent as small as possible.
    """

    __slots__ = ("_num", "_exp", "_key")

    def __init__(self, numerators: np.ndarray, exponent: int = 0):
        num = np.asarray(numerators, dtype=object)
        if num.ndim != 2 or num.shape[0] == 0 or num.shape[1] == 0:
            raise ValueError(f"matrix must be non-empty and 2-D, got shape {num.shape}")
        exponent = int(exponent)
        if exponent < 0:
            num = num * (1 << -exponent)
            exponent = 0
        if exponent:
            acc = int(np.bitwise_or.reduce(num, axis=None))
            shift = exponent if acc == 0 else min(_two_adic(acc), exponent)
            if shift:
                # exact: every entry is divisible by 2**shift
                num = num // (1 << shift)
                exponent -= shift
        num.flags.writeable = False
        self._num = num
        self._exp = exponent
        self._key = None

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> DyadicMatrix:
        """Build from rows of anything ``Dyadic.coerce`` accepts."""
        drows = [[Dyadic.coerce(x) for x in r] for r in rows]
        if not drows or not drows[0]:
            raise ValueError("matrix must be non-empty")
        width = len(drows[0])
        if any(len(r) != width for r in drows):
            raise ValueError("ragged rows")
        e = max(x.exponent for r in drows for x in r)
        ints = [[x.numerator << (e - x.exponent) for x in r] for r in drows]
        return cls(_as_object_array(ints), e)

    @classmethod
    def from_ints(cls, rows, denominator: int = 1) -> DyadicMatrix:
        if denominator <= 0 or denominator & (denominator - 1):
            raise ValueError("denominator must be a positive power of two")
        ints = [[int(x) for x in r] for r in rows]
        return cls(_as_object_array(ints), denominator.bit_length() - 1)

    @classmethod
    def identity(cls, n: int) -> DyadicMatrix:
        return cls(_as_object_array([[int(i == j) for j in range(n)] for i in range(n)]))

    @classmethod
    def diagonal(cls, values) -> DyadicMatrix:
        vals = [Dyadic.coerce(v) for v in values]
        n = len(vals)
        return cls.from_rows([[vals[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self._num.shape

    @property
    def rows(self) -> int:
        return self._num.shape[0]

    @property
    def cols(self) -> int:
        return self._num.shape[1]

    @property
    def numerators(self) -> np.ndarray:
        """Read-only integer numerator array (common denominator ``2**exponent``)."""
        return self._num

    @property
    def exponent(self) -> int:
        return self._exp

    @property
    def entries(self) -> tuple[Dyadic, ...]:
        """Row-major canonical entries."""
        return tuple(Dyadic(int(x), self._exp) for x in self._num.flat)

    def __getitem__(self, idx) -> Dyadic:
        i, j = idx
        return Dyadic(int(self._num[i, j]), self._exp)

    def row(self, i: int) -> tuple[Dyadic, ...]:
        return tuple(Dyadic(int(x), self._exp) for x in self._num[i])

    def to_fractions(self) -> list[list[Fraction]]:
        d = 1 << self._exp
        return [[Fraction(int(x), d) for x in r] for r in self._num]

    def key(self) -> tuple:
        """Canonical hashable serialization."""
        if self._key is None:
            self._key = (self.shape, self._exp, tuple(self._num.flat))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, DyadicMatrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __matmul__(self, other: DyadicMatrix) -> DyadicMatrix:
        return mat_mul(self, other)

    def __neg__(self):
        return DyadicMatrix(-self._num, self._exp)

    def __add__(self, other: DyadicMatrix) -> DyadicMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        e = max(self._exp, other._exp)
        a = self._num * (1 << (e - self._exp))
        b = other._num * (1 << (e - other._exp))
        return DyadicMatrix(a + b, e)

    def __sub__(self, other: DyadicMatrix) -> DyadicMatrix:
        return self + (-other)

    def scale(self, c) -> DyadicMatrix:
        c = Dyadic.coerce(c)
        return DyadicMatrix(self._num * c.numerator, self._exp + c.exponent)

    @property
    def T(self) -> DyadicMatrix:
        return DyadicMatrix(self._num.T.copy(), self._exp)

    def trace(self) -> Dyadic:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return Dyadic(int(sum(self._num.diagonal())), self._exp)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == DyadicMatrix.identity(self.rows)

    def is_orthogonal(self) -> bool:
        return self.rows == self.cols and (self @ self.T).is_identity()

    def __repr__(self):
        return f"DyadicMatrix({self.rows}x{self.cols}, exp={self._exp})"

    def __str__(self):
        return format_matrix(self)


def mat_mul(a: DyadicMatrix, b: DyadicMatrix) -> DyadicMatrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    return DyadicMatrix(a.numerators.dot(b.numerators), a.exponent + b.exponent)


def kron(a: DyadicMatrix, b: DyadicMatrix) -> DyadicMatrix:
    """Kronecker product; block (p, q) is ``a[p, q] * b``."""
    return DyadicMatrix(np.kron(a.numerators, b.numerators), a.exponent + b.exponent)


def mat_inverse_orthogonal(m: DyadicMatrix) -> DyadicMatrix:
    if not m.is_orthogonal():
        raise ValueError("matrix is not orthogonal")
    return m.T


def det(m: DyadicMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = m.rows
    if n != m.cols:
        raise ValueError("determinant of a non-square matrix")
    a = [[int(x) for x in r] for r in m.numerators]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], 1 << (m.exponent * n))


def solve_rows(basis: DyadicMatrix, vectors: DyadicMatrix) -> list[list[Fraction]]:
    """Coefficients c with ``c @ basis == v`` for every row v of ``vectors``."""
    n = basis.rows
    if n != basis.cols or vectors.cols != n:
        raise ValueError("basis must be square and match the vector length")
    # Gauss-Jordan on [basis^T | vectors^T] over Q.
    bt = basis.T.to_fractions()
    vt = vectors.T.to_fractions()
    aug = [bt[i] + vt[i] for i in range(n)]
    width = len(aug[0])
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise ValueError("basis is singular")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [[aug[i][n + k] for i in range(n)] for k in range(width - n)]


@dataclass(frozen=True)
class IntMatrix:
    """Plain integer matrix, used for Hermite normal forms."""

    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        data = tuple(tuple(int(x) for x in r) for r in self.data)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "data", data)

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0]) if self.data else 0

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf(m: IntMatrix | Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form with zero rows dropped.

    Rows are inserted one at a time into an echelon basis, so intermediate
    entries stay near the size of the pivots.
    """
    rows = m.data if isinstance(m, IntMatrix) else tuple(tuple(int(x) for x in r) for r in m)
    if not rows:
        return IntMatrix(())
    ncols = len(rows[0])
    pivots: dict[int, list[int]] = {}
    for r in rows:
        v = list(r)
        for c in range(ncols):
            if v[c] == 0:
                continue
            p = pivots.get(c)
            if p is None:
                if v[c] < 0:
                    v = [-x for x in v]
                pivots[c] = v
                break
            g, x, y = _xgcd(p[c], v[c])
            a, b = p[c] // g, v[c] // g
            new_p = [x * pi + y * vi for pi, vi in zip(p, v)]
            v = [a * vi - b * pi for pi, vi in zip(p, v)]
            if new_p[c] < 0:
                new_p = [-t for t in new_p]
            pivots[c] = new_p
            # keep later entries of the pivot row small relative to deeper pivots
            for c2 in range(c + 1, ncols):
                q = pivots.get(c2)
                if q is not None and new_p[c2]:
                    f = new_p[c2] // q[c2]
                    if f:
                        new_p = [s - f * t for s, t in zip(new_p, q)]
            pivots[c] = new_p
    order = sorted(pivots)
    out = [pivots[c] for c in order]
    # reduce above each pivot into [0, pivot)
    for k in range(len(out)):  # left to right: later pivots only touch later columns
        c = order[k]
        for i in range(k):
            f = out[i][c] // out[k][c]
            if f:
                out[i] = [s - f * t for s, t in zip(out[i], out[k])]
    return IntMatrix(tuple(tuple(r) for r in out))


def format_matrix(m: DyadicMatrix) -> str:
    """Render in the text exchange format: ``rows cols`` then one line per row."""
    lines = [f"{m.rows} {m.cols}"]
    for i in range(m.rows):
        lines.append(" ".join(str(x) for x in m.row(i)))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> DyadicMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("first line must be 'rows cols'")
    nrows, ncols = int(header[0]), int(header[1])
    if nrows <= 0 or ncols <= 0:
        raise ValueError("rows and cols must be positive")
    body = lines[1:]
    if len(body) != nrows:
        raise ValueError(f"expected {nrows} rows, found {len(body)}")
    rows = []
    for ln in body:
        cells = ln.split()
        if len(cells) != ncols:
            raise ValueError(f"expected {ncols} entries per row, found {len(cells)}")
        rows.append([Dyadic.parse(c) for c in cells])
    return DyadicMatrix.from_rows(rows)
