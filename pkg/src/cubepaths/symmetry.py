"""Automorphisms of Q_n and canonical forms of pair-sets.

An automorphism is a coordinate permutation followed by an xor with a
mask.  Canonical forms come from a sweep over the whole group, which has
``n! * 2**n`` elements; that is only affordable for ``n <= 6``.
"""
from __future__ import annotations

from random import Random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial

from .hypercube import DimensionError, check_dimension
from .pairset import PairSet, validate_pairset

SWEEP_CAP = 6


@dataclass(frozen=True)
class Automorphism:
    perm: tuple[int, ...]
    mask: int

    @property
    def n(self) -> int:
        return len(self.perm)

    def __call__(self, v: int) -> int:
        out = 0
        for j, pj in enumerate(self.perm):
            if v >> j & 1:
                out |= 1 << pj
        return out ^ self.mask

    def compose(self, other: "Automorphism") -> "Automorphism":
        """``self`` after ``other``."""
        if self.n != other.n:
            raise DimensionError("automorphisms of different dimensions")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.n))
        return Automorphism(perm, self._permute(other.mask) ^ self.mask)

    def inverse(self) -> "Automorphism":
        inv = [0] * self.n
        for j, pj in enumerate(self.perm):
            inv[pj] = j
        inv_t = tuple(inv)
        unmasked = Automorphism(inv_t, 0)
        return Automorphism(inv_t, unmasked(self.mask))

    def _permute(self, v: int) -> int:
        out = 0
        for j, pj in enumerate(self.perm):
            if v >> j & 1:
                out |= 1 << pj
        return out

    def table(self) -> tuple[int, ...]:
        return tuple(self(v) for v in range(1 << self.n))

    @classmethod
    def identity(cls, n: int) -> "Automorphism":
        return cls(tuple(range(n)), 0)

    @classmethod
    def random(cls, n: int, rng: Random) -> "Automorphism":
        perm = list(range(n))
        rng.shuffle(perm)
        return cls(tuple(perm), rng.randrange(1 << n))

    @classmethod
    def flip(cls, n: int, i: int) -> "Automorphism":
        return cls(tuple(range(n)), 1 << i)


def group_order(n: int) -> int:
    return factorial(n) * (1 << n)


@lru_cache(maxsize=None)
def group_tables(n: int) -> tuple[tuple[Automorphism, tuple[int, ...]], ...]:
    """Every automorphism of Q_n with its vertex lookup table."""
    if n > SWEEP_CAP:
        raise DimensionError(f"group sweep capped at n={SWEEP_CAP}")
    check_dimension(n)
    out = []
    for perm in permutations(range(n)):
        base = Automorphism(perm, 0).table()
        for mask in range(1 << n):
            out.append((Automorphism(perm, mask), tuple(x ^ mask for x in base)))
    return tuple(out)


def apply_automorphism(f: Automorphism, A: PairSet) -> PairSet:
    if f.n != A.n:
        raise DimensionError(f"automorphism of Q_{f.n} applied to a pair-set in Q_{A.n}")
    return validate_pairset(((f(p.a), f(p.b)) for p in A.pairs), A.n)


def map_path(f: Automorphism, path) -> tuple[int, ...]:
    return tuple(f(v) for v in path)


def _image_key(table: tuple[int, ...], pairs) -> tuple[tuple[int, int], ...]:
    img = []
    for a, b in pairs:
        x, y = table[a], table[b]
        img.append((x, y) if x <= y else (y, x))
    img.sort()
    return tuple(img)


@dataclass(frozen=True)
class CanonicalForm:
    """Least image of a pair-set over Aut(Q_n), ordered as sorted int pairs."""

    key: tuple[tuple[int, int], ...]
    n: int
    witness: Automorphism
    stabilizer_order: int

    @property
    def rep(self) -> PairSet:
        return validate_pairset(self.key, self.n)

    @property
    def orbit_size(self) -> int:
        return group_order(self.n) // self.stabilizer_order


def canonical_key(pairs, n: int) -> tuple[tuple[int, int], ...]:
    """Canonical key of raw ``(u, v)`` pairs; skips witness bookkeeping."""
    return min(_image_key(t, pairs) for _, t in group_tables(n))


def canonical_form(A: PairSet | tuple, n: int | None = None) -> CanonicalForm:
    if isinstance(A, PairSet):
        pairs, n = A.pairs, A.n
    else:
        pairs = A
        if n is None:
            raise ValueError("raw pairs need an explicit dimension")
    if n > SWEEP_CAP:
        raise DimensionError(f"canonical forms are capped at n={SWEEP_CAP}")
    best = None
    witness = None
    count = 0
    for f, t in group_tables(n):
        k = _image_key(t, pairs)
        if best is None or k < best:
            best, witness, count = k, f, 1
        elif k == best:
            count += 1
    return CanonicalForm(best, n, witness, count)


def are_isomorphic(A: PairSet, B: PairSet) -> bool:
    if A.n != B.n:
        raise DimensionError("pair-sets of different dimensions")
    if len(A) != len(B):
        return False
    return canonical_key(A.pairs, A.n) == canonical_key(B.pairs, B.n)


def find_isomorphism(A: PairSet, B: PairSet) -> Automorphism | None:
    """An automorphism carrying ``A`` onto ``B``, if one exists."""
    ca, cb = canonical_form(A), canonical_form(B)
    if ca.key != cb.key:
        return None
    return cb.witness.inverse().compose(ca.witness)
