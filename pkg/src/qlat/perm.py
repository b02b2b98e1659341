"""Permutation groups: action on a vector shell, deterministic Schreier-Sims, sifting.

Permutations act on the right: ``p * q`` applies p first, then q.  They are
stored as numpy index arrays, so composition is one fancy-indexing call.
"""
from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .exact import DyadicMatrix

log = logging.getLogger(__name__)


def _dtype(n: int):
    return np.int16 if n < 2 ** 15 else np.int32


class Permutation:
    """Bijection on {0, ..., n-1}; ``images[x]`` is the image of x."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int] | np.ndarray, check: bool = True):
        arr = np.asarray(images)
        if arr.ndim != 1:
            raise ValueError("permutation images must be one-dimensional")
        arr = arr.astype(_dtype(len(arr)))
        if check:
            seen = np.zeros(len(arr), dtype=bool)
            if len(arr) and (arr.min() < 0 or arr.max() >= len(arr)):
                raise ValueError("image out of range")
            seen[arr] = True
            if not seen.all():
                raise ValueError("not a bijection")
        arr.flags.writeable = False
        self.images = arr

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(np.arange(n, dtype=_dtype(n)), check=False)

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(other.images[self.images], check=False)

    def inverse(self) -> Permutation:
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(len(self.images), dtype=self.images.dtype)
        return Permutation(inv, check=False)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** -k
        out = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_identity(self) -> bool:
        return bool((self.images == np.arange(len(self.images))).all())

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return np.array_equal(self.images, other.images)

    def __hash__(self):
        return hash(self.images.tobytes())

    def cycles(self) -> list[list[int]]:
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = int(self.images[x])
            out.append(cyc)
        return out

    def cycle_type(self) -> Counter:
        """``{cycle length: count}``, fixed points included."""
        return Counter(len(c) for c in self.cycles())

    def order(self) -> int:
        return math.lcm(*self.cycle_type())

    def __repr__(self):
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return f"Permutation(identity, n={self.degree})"
        shown = "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial[:4])
        more = "..." if len(nontrivial) > 4 else ""
        return f"Permutation({shown}{more}, n={self.degree})"


class NotAShellAutomorphism(ValueError):
    """A matrix sent some vector of the shell outside the shell."""


def _row_keys(m: DyadicMatrix, exponent: int) -> list[tuple]:
    shift = exponent - m.exponent
    num = m.numerators
    if shift:
        num = num * (1 << shift)
    return [tuple(int(x) for x in r) for r in num]


def action_on_vectors(gens: Sequence[DyadicMatrix], vectors: DyadicMatrix) -> list[Permutation]:
    """Permutation of the rows of ``vectors`` induced by each matrix (v -> g v)."""
    e = vectors.exponent
    keys = _row_keys(vectors, e)
    index = {k: n for n, k in enumerate(keys)}
    if len(index) != len(keys):
        raise ValueError("vector list contains duplicates")
    perms = []
    for g in gens:
        if g.shape != (vectors.cols, vectors.cols):
            raise ValueError("generator dimension does not match the vectors")
        images = vectors @ g.T  # row v -> (g v^T)^T
        if images.exponent > e:
            raise NotAShellAutomorphism("not an automorphism of the minimal shell")
        img = []
        for k in _row_keys(images, e):
            n = index.get(k)
            if n is None:
                raise NotAShellAutomorphism("not an automorphism of the minimal shell")
            img.append(n)
        perms.append(Permutation(img))
    return perms


def action_on_short_vectors(gens: Sequence[DyadicMatrix], svs) -> list[Permutation]:
    """Permutations of a ``ShortVectorSet`` (canonical row order) induced by ``gens``."""
    return action_on_vectors(gens, svs.vectors)


@dataclass
class _Level:
    point: int
    gens: list[np.ndarray] = field(default_factory=list)
    # orbit point -> coset representative u with u[point] == orbit point
    reps: dict[int, np.ndarray] = field(default_factory=dict)
    inv_reps: dict[int, np.ndarray] = field(default_factory=dict)
    tested: set = field(default_factory=set)

    def extend_orbit(self, identity: np.ndarray) -> None:
        """Grow the orbit/transversal; existing representatives never change."""
        if not self.reps:
            self.reps[self.point] = identity
        frontier = list(self.reps)
        while frontier:
            nxt = []
            for beta in frontier:
                u = self.reps[beta]
                for s in self.gens:
                    gamma = int(s[beta])
                    if gamma not in self.reps:
                        self.reps[gamma] = s[u]
                        nxt.append(gamma)
            frontier = nxt

    def inverse_rep(self, beta: int) -> np.ndarray:
        inv = self.inv_reps.get(beta)
        if inv is None:
            u = self.reps[beta]
            inv = np.empty_like(u)
            inv[u] = np.arange(len(u), dtype=u.dtype)
            self.inv_reps[beta] = inv
        return inv


class BSGS:
    """Base and strong generating set built by deterministic Schreier-Sims."""

    def __init__(self, degree: int, levels: list[_Level]):
        self.degree = degree
        self._levels = levels

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self._levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        seen, out = set(), []
        for lv in self._levels:
            for g in lv.gens:
                k = g.tobytes()
                if k not in seen:
                    seen.add(k)
                    out.append(Permutation(g, check=False))
        return out

    @property
    def transversals(self) -> list[dict[int, Permutation]]:
        return [{b: Permutation(u, check=False) for b, u in lv.reps.items()} for lv in self._levels]

    @property
    def orbit_sizes(self) -> list[int]:
        return [len(lv.reps) for lv in self._levels]

    @property
    def order(self) -> int:
        return math.prod(self.orbit_sizes)

    def sift_array(self, h: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        for i in range(start, len(self._levels)):
            lv = self._levels[i]
            beta = int(h[lv.point])
            if beta not in lv.reps:
                return h, i
            h = lv.inverse_rep(beta)[h]
        return h, len(self._levels)

    def sift(self, p: Permutation) -> bool:
        """Membership test: True iff p sifts to the identity."""
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        h, _ = self.sift_array(p.images)
        return bool((h == np.arange(self.degree)).all())

    __contains__ = sift

    def schreier_generators(self):
        """Yield (level, Schreier generator) for every level."""
        for i, lv in enumerate(self._levels):
            for beta, u in lv.reps.items():
                for s in lv.gens:
                    gamma = int(s[beta])
                    yield i, lv.inverse_rep(gamma)[s[u]]

    def verify(self) -> bool:
        """Re-check the strong generating property from scratch."""
        ident = np.arange(self.degree)
        for i, h in self.schreier_generators():
            r, _ = self.sift_array(h, i + 1)
            if not (r == ident).all():
                return False
        return True

    def to_text(self) -> str:
        """degree line, base line, then one strong generator per line in image notation."""
        lines = [str(self.degree), " ".join(map(str, self.base))]
        lines += [" ".join(map(str, g.images.tolist())) for g in self.strong_generators]
        return "\n".join(lines) + "\n"


def _largest_orbit_point(gens: list[np.ndarray], n: int) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x, y in enumerate(g.tolist()):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    sizes = Counter(find(x) for x in range(n))
    # roots are the minimal members, so ties break toward the lowest index
    return min(sizes, key=lambda r: (-sizes[r], r))


def _longest_cycle_point(h: np.ndarray) -> int:
    cycles = Permutation(h, check=False).cycles()
    best = max(cycles, key=lambda c: (len(c), -c[0]))
    return best[0]


def schreier_sims(gens: Sequence[Permutation], base: Sequence[int] = ()) -> BSGS:
    """Deterministic Schreier-Sims.

    Every Schreier generator at every level is sifted; pairs (orbit point,
    generator) are tested once, which stays sound because transversals only
    grow.  ``base`` is an optional prefix of base points.
    """
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise ValueError("generators must have the same degree")
    ident = np.arange(n, dtype=_dtype(n))
    arrays = [g.images for g in gens if not g.is_identity()]

    levels: list[_Level] = []
    for b in base:
        levels.append(_Level(int(b)))
    if arrays and not levels:
        levels.append(_Level(_largest_orbit_point(arrays, n)))
    for g in arrays:
        if all(g[lv.point] == lv.point for lv in levels):
            levels.append(_Level(_longest_cycle_point(g)))
    for i, lv in enumerate(levels):
        lv.gens = [g for g in arrays if all(g[levels[j].point] == levels[j].point for j in range(i))]
        lv.extend_orbit(ident)

    bsgs = BSGS(n, levels)
    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        restart = None
        for beta in list(lv.reps):
            u = lv.reps[beta]
            for k, s in enumerate(lv.gens):
                if (beta, k) in lv.tested:
                    continue
                lv.tested.add((beta, k))
                gamma = int(s[beta])
                h = lv.inverse_rep(gamma)[s[u]]
                r, j = bsgs.sift_array(h, i + 1)
                if (r == ident).all():
                    continue
                if j == len(levels):
                    levels.append(_Level(_longest_cycle_point(r)))
                for lvl in levels[i + 1:j + 1]:
                    lvl.gens.append(r)
                    lvl.extend_orbit(ident)
                restart = j
                break
            if restart is not None:
                break
        if restart is not None:
            log.debug("schreier-sims: new strong generator at level %d, orbits %s",
                      restart, bsgs.orbit_sizes)
            i = restart
        else:
            i -= 1
    log.info("schreier-sims: base length %d, orbit sizes %s", len(levels), bsgs.orbit_sizes)
    return bsgs


def sift(b: BSGS, p: Permutation) -> bool:
    return b.sift(p)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as ``[(prime, exponent), ...]``."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def format_factorization(factors: Sequence[tuple[int, int]]) -> str:
    if not factors:
        return "1"
    return " · ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in factors)
