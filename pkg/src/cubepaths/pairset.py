"""Pair-sets in Q_n and the operations the constructions are built from.

A pair is an unordered pair of vertices, possibly degenerate.  Pairs and
pair-sets store vertices as plain ints; the dimension travels with the
:class:`PairSet`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, NamedTuple, Sequence

from .hypercube import (
    DimensionError,
    check_dimension,
    chi,
    format_bits,
    iota_bits,
    lex_key,
    neighbor_masks,
    parse_bits,
    rho_bits,
)


class PairSetError(ValueError):
    """A list of pairs that is not a pair-set.  ``clause`` names the broken rule."""

    def __init__(self, clause: str, message: str):
        super().__init__(message)
        self.clause = clause


class Pair(NamedTuple):
    a: int
    b: int

    @property
    def degenerate(self) -> bool:
        return self.a == self.b

    @property
    def is_edge(self) -> bool:
        return (self.a ^ self.b).bit_count() == 1

    @property
    def is_odd(self) -> bool:
        return (self.a ^ self.b).bit_count() & 1 == 1

    @property
    def chi(self) -> int:
        return chi(self.a) + chi(self.b)

    def other(self, v: int) -> int:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise KeyError(v)

    def format(self, n: int) -> str:
        return f"{format_bits(self.a, n)}-{format_bits(self.b, n)}"


def make_pair(u: int, v: int, n: int) -> Pair:
    """Pair with the lexicographically smaller literal first."""
    if lex_key(v, n) < lex_key(u, n):
        u, v = v, u
    return Pair(u, v)


@dataclass(frozen=True)
class PairSet:
    n: int
    pairs: tuple[Pair, ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, p: object) -> bool:
        return p in self.pairs

    @property
    def cover(self) -> int:
        """Bitmask over V_n of the vertices in the union of all pairs."""
        m = 0
        for p in self.pairs:
            m |= (1 << p.a) | (1 << p.b)
        return m

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for p in self.pairs for v in (p.a, p.b))

    @property
    def chi(self) -> int:
        return sum(p.chi for p in self.pairs)

    @property
    def odd_count(self) -> int:
        return sum(p.is_odd for p in self.pairs)

    def pair_of(self, v: int) -> Pair:
        for p in self.pairs:
            if v == p.a or v == p.b:
                return p
        raise KeyError(v)

    def format(self) -> str:
        return ",".join(p.format(self.n) for p in self.pairs)

    def __str__(self) -> str:
        return "{" + self.format() + "}"

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "PairSet":
        """Parse ``"0000-0111,0001-0110"``; a lone vertex is a degenerate pair."""
        raw: list[tuple[int, int]] = []
        dims = set()
        for chunk in text.replace(";", ",").split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            ends = [s for s in chunk.split("-")]
            if len(ends) == 1:
                ends = ends * 2
            if len(ends) != 2:
                raise ValueError(f"bad pair literal {chunk!r}")
            (n1, u), (n2, v) = parse_bits(ends[0]), parse_bits(ends[1])
            dims.update((n1, n2))
            raw.append((u, v))
        if n is not None:
            dims.add(n)
        if len(dims) > 1:
            raise PairSetError("dimension", f"mixed dimensions {sorted(dims)}")
        if not dims:
            raise ValueError("empty pair-set literal needs an explicit dimension")
        return validate_pairset(raw, dims.pop())


def _sort_key(n: int):
    return lambda p: (lex_key(p.a, n), lex_key(p.b, n))


def validate_pairset(pairs: Iterable[tuple[int, int]], n: int) -> PairSet:
    """Check the pair-set clauses and return the canonical :class:`PairSet`."""
    check_dimension(n)
    seen: set[int] = set()
    out = []
    for u, v in pairs:
        for w in (u, v):
            if w < 0 or w >> n:
                raise PairSetError("dimension", f"vertex {w} not in dimension {n}")
        for w in {u, v}:
            if w in seen:
                raise PairSetError(
                    "disjoint", f"vertex {format_bits(w, n)} appears in two pairs"
                )
            seen.add(w)
        out.append(make_pair(u, v, n))
    if out and all(p.degenerate for p in out):
        raise PairSetError("nondegenerate", "non-empty pair-set with only degenerate pairs")
    return PairSet(n, tuple(sorted(out, key=_sort_key(n))))


def pairset(n: int, pairs: Iterable[tuple[int, int]]) -> PairSet:
    return validate_pairset(pairs, n)


# --- classification -------------------------------------------------------


@dataclass(frozen=True)
class ClassFlags:
    odd: bool
    balanced: bool
    pure: bool
    edge_pair_count: int
    degenerate_count: int
    chi: int
    diminishable: bool


def enc_mask(cover: int, n: int) -> tuple[int, int]:
    """Return ``(enco, enc)`` bitmasks for a vertex set given as a bitmask."""
    nb = neighbor_masks(n)
    enco = 0
    for v in range(1 << n):
        if nb[v] & cover == nb[v]:
            enco |= 1 << v
    return enco, enco & ~cover


def encompassment(A: PairSet) -> tuple[frozenset[int], frozenset[int]]:
    enco, enc = enc_mask(A.cover, A.n)
    return _mask_to_set(enco), _mask_to_set(enc)


def _mask_to_set(m: int) -> frozenset[int]:
    out = []
    v = 0
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def in_facet(cover: int, n: int) -> bool:
    """True when the vertex set lies inside some halfcube {v : v(i) = k}."""
    full = (1 << (1 << n)) - 1
    for i in range(n):
        side1 = 0
        for v in range(1 << n):
            if v >> i & 1:
                side1 |= 1 << v
        if cover & side1 == 0 or cover & (full ^ side1) == 0:
            return True
    return False


def is_diminishable(A: PairSet) -> bool:
    n = A.n
    if not all(p.is_odd for p in A.pairs):
        return False
    edges = sum(p.is_edge for p in A.pairs)
    if len(A) <= n - 1:
        if n != 4:
            return True
        return edges > 0 or not in_facet(A.cover, n)
    if len(A) == n and n != 4:
        return edges >= 2 and enc_mask(A.cover, n)[1] == 0
    return False


def classify(A: PairSet) -> ClassFlags:
    c = A.chi
    return ClassFlags(
        odd=all(p.is_odd for p in A.pairs),
        balanced=c == 0,
        pure=not any(p.degenerate for p in A.pairs),
        edge_pair_count=sum(p.is_edge for p in A.pairs),
        degenerate_count=sum(p.degenerate for p in A.pairs),
        chi=c,
        diminishable=is_diminishable(A),
    )


# --- sigma, rho, iota -----------------------------------------------------


class SigmaCount(NamedTuple):
    n0: int
    n1: int


def sigma(A: PairSet, i: int) -> SigmaCount:
    _check_coord(A.n, i)
    n0 = n1 = 0
    for p in A.pairs:
        ka, kb = p.a >> i & 1, p.b >> i & 1
        if ka == kb:
            if ka:
                n1 += 1
            else:
                n0 += 1
    return SigmaCount(n0, n1)


def _check_coord(n: int, i: int) -> None:
    if not 0 <= i < n:
        raise IndexError(f"coordinate {i} outside [0, {n})")


def is_complete(A: PairSet, i: int) -> bool:
    """True when every pair of ``A`` is constant at coordinate ``i``."""
    return all(((p.a ^ p.b) >> i) & 1 == 0 for p in A.pairs)


@dataclass(frozen=True)
class NotAPairSet:
    """Projection that is non-empty but consists only of degenerate pairs."""

    n: int
    pairs: tuple[Pair, ...]


def rho_set(A: PairSet, i: int, k: int) -> PairSet | NotAPairSet:
    if A.n < 2:
        raise DimensionError("cannot project below dimension 1")
    _check_coord(A.n, i)
    m = A.n - 1
    projected = [
        make_pair(rho_bits(p.a, i, k), rho_bits(p.b, i, k), m)
        for p in A.pairs
        if p.a >> i & 1 == k and p.b >> i & 1 == k
    ]
    if projected and all(p.degenerate for p in projected):
        return NotAPairSet(m, tuple(sorted(projected, key=_sort_key(m))))
    return validate_pairset(projected, m)


def iota_set(A0: PairSet, A1: PairSet, i: int, k: int) -> PairSet:
    """Embed ``A0`` in the halfcube ``v(i) = k`` and ``A1`` in the other one."""
    if A0.n != A1.n:
        raise DimensionError("halves must share a dimension")
    n = A0.n + 1
    check_dimension(n)
    if not 0 <= i < n:
        raise IndexError(i)
    lifted = [(iota_bits(p.a, i, k), iota_bits(p.b, i, k)) for p in A0.pairs]
    lifted += [(iota_bits(p.a, i, 1 - k), iota_bits(p.b, i, 1 - k)) for p in A1.pairs]
    return validate_pairset(lifted, n)


# --- separating coordinates -----------------------------------------------


@dataclass(frozen=True)
class SixCycleObstruction:
    """Three edge-pairs on a 6-cycle: no coordinate separates them."""

    pairs: tuple[Pair, ...]


def is_separating(A: PairSet, i: int) -> bool:
    sides = {p.a >> i & 1 for p in A.pairs if p.is_edge and (p.a ^ p.b) >> i & 1 == 0}
    return sides == {0, 1}


def separating_coordinate(A: PairSet) -> int | SixCycleObstruction:
    """A coordinate that separates ``A`` and on which ``A`` is complete.

    ``A`` must consist of two or three edge-pairs.  Follows the induction:
    a coordinate outside every pair's direction makes ``A`` complete; if it
    does not separate, all pairs sit on one side and the search continues
    in that halfcube.
    """
    if len(A) not in (2, 3) or not all(p.is_edge for p in A.pairs):
        raise ValueError("separating_coordinate needs two or three edge-pairs")
    directions = {(p.a ^ p.b).bit_length() - 1 for p in A.pairs}
    free = [i for i in range(A.n) if i not in directions]
    for i in free:
        if is_separating(A, i):
            return i
        # not separating: all pairs on one side of i, continue inside that facet
    return SixCycleObstruction(A.pairs)


def lies_on_six_cycle(pairs: Sequence[Pair], n: int) -> bool:
    """True when three edge-pairs are alternate edges of an induced 6-cycle."""
    if len(pairs) != 3 or not all(p.is_edge for p in pairs):
        return False
    verts = [v for p in pairs for v in (p.a, p.b)]
    nb = neighbor_masks(n)
    vmask = sum(1 << v for v in verts)
    # induced subgraph must be 2-regular and connected on 6 vertices
    if any((nb[v] & vmask).bit_count() != 2 for v in verts):
        return False
    seen = 1 << verts[0]
    frontier = seen
    while frontier:
        nxt = 0
        for v in verts:
            if frontier >> v & 1:
                nxt |= nb[v] & vmask
        frontier = nxt & ~seen
        seen |= nxt
    return seen == vmask


# --- the merge relation ---------------------------------------------------


@dataclass(frozen=True)
class MergeStep:
    """Join pair ``alpha-beta`` and pair ``alpha2-beta2`` across edge ``beta-beta2``."""

    alpha: int
    beta: int
    alpha2: int
    beta2: int

    @property
    def coordinate(self) -> int:
        return (self.beta ^ self.beta2).bit_length() - 1


@dataclass(frozen=True)
class CompletionScript:
    coordinate: int | None
    steps: tuple[MergeStep, ...] = field(default_factory=tuple)


def _find_oriented(A: PairSet, alpha: int, beta: int) -> Pair:
    p = make_pair(alpha, beta, A.n)
    if p not in A.pairs:
        raise PairSetError("merge", f"{p.format(A.n)} is not a pair of the pair-set")
    return p


def merge_step(A: PairSet, p: tuple[int, int], q: tuple[int, int], i: int) -> PairSet:
    """Apply one merge: ``p = (alpha, beta)``, ``q = (alpha2, beta2)`` with ``beta ^ e_i = beta2``."""
    (alpha, beta), (alpha2, beta2) = p, q
    pp = _find_oriented(A, alpha, beta)
    qq = _find_oriented(A, alpha2, beta2)
    if pp == qq:
        raise PairSetError("merge", "merge needs two distinct pairs")
    if beta ^ beta2 != 1 << i:
        raise PairSetError("merge", f"bridge condition fails at coordinate {i}")
    rest = [tuple(x) for x in A.pairs if x != pp and x != qq]
    return validate_pairset(rest + [(alpha, alpha2)], A.n)


def apply_step(A: PairSet, step: MergeStep) -> PairSet:
    return merge_step(A, (step.alpha, step.beta), (step.alpha2, step.beta2), step.coordinate)


def replay(B: PairSet, steps: Iterable[MergeStep]) -> PairSet:
    for s in steps:
        B = apply_step(B, s)
    return B


def find_merge_script(B: PairSet, A: PairSet) -> tuple[MergeStep, ...] | None:
    """Steps turning ``B`` into ``A`` by merges, or ``None`` when ``B`` does not reach ``A``.

    Every pair of ``A`` is traced as a chain of pairs of ``B`` linked by
    bridging edges; backtracks over the choice of the next link.
    """
    if A.n != B.n:
        raise DimensionError("pair-sets of different dimensions")
    targets = list(A.pairs)
    bpairs = list(B.pairs)
    owner: dict[int, int] = {}
    for idx, p in enumerate(bpairs):
        owner[p.a] = idx
        owner[p.b] = idx
    a_cover = A.cover
    used = [False] * len(bpairs)
    steps: list[MergeStep] = []

    def chain(t: int) -> bool:
        if t == len(targets):
            return all(used)
        s, goal = targets[t].a, targets[t].b
        if s not in owner or goal not in owner:
            return False
        return walk(t, s, s, goal)

    def walk(t: int, start: int, cur: int, goal: int) -> bool:
        idx = owner[cur]
        if used[idx]:
            return False
        used[idx] = True
        far = bpairs[idx].other(cur)
        if far == goal:
            if chain(t + 1):
                return True
        elif far == start or not (a_cover >> far & 1):
            for j in range(B.n):
                nxt = far ^ (1 << j)
                k = owner.get(nxt)
                if k is None or used[k]:
                    continue
                # bridge ends avoid A's endpoints, except a degenerate pair at the goal
                if a_cover >> nxt & 1 and not (nxt == goal and bpairs[k].degenerate):
                    continue
                steps.append(MergeStep(start, far, bpairs[k].other(nxt), nxt))
                if walk(t, start, nxt, goal):
                    return True
                steps.pop()
        used[idx] = False
        return False

    if not chain(0):
        return None
    if replay(B, steps) != A:
        return None
    return tuple(steps)


# --- completions ----------------------------------------------------------


def find_completion(
    A: PairSet,
    accept: Callable[[PairSet, int], bool] | None = None,
    coordinates: Iterable[int] | None = None,
) -> tuple[PairSet, CompletionScript] | None:
    """Search for an ``i``-complete ``B`` with ``B =>* A``.

    Each pair crossing ``i`` is cut into two odd pairs joined by an edge in
    direction ``i``.  Coordinates are tried in increasing order, cut points
    in literal order; ``accept`` can reject candidates.  Returns ``None``
    when nothing is found.
    """
    n = A.n
    for i in coordinates if coordinates is not None else range(n):
        crossing = [p for p in A.pairs if (p.a ^ p.b) >> i & 1]
        if not crossing:
            if accept is None or accept(A, i):
                return A, CompletionScript(i, ())
            continue
        keep = [tuple(p) for p in A.pairs if not (p.a ^ p.b) >> i & 1]
        options = []
        for p in crossing:
            lo, hi = (p.a, p.b) if p.a >> i & 1 == 0 else (p.b, p.a)
            cands = []
            for g in sorted(range(1 << n), key=lambda v: lex_key(v, n)):
                if g >> i & 1 != 0 or chi(g) == chi(lo):
                    continue
                cands.append(g)
            options.append((lo, hi, cands))
        taken0 = A.cover
        for choice in product(*(c for _, _, c in options)):
            mask = taken0
            ok = True
            for g in choice:
                for w in (g, g ^ (1 << i)):
                    if mask >> w & 1:
                        ok = False
                        break
                    mask |= 1 << w
                if not ok:
                    break
            if not ok:
                continue
            new = list(keep)
            steps = []
            for (lo, hi, _), g in zip(options, choice):
                new += [(lo, g), (g ^ (1 << i), hi)]
                steps.append(MergeStep(lo, g, hi, g ^ (1 << i)))
            B = validate_pairset(new, n)
            if accept is not None and not accept(B, i):
                continue
            return B, CompletionScript(i, tuple(steps))
    return None


def halves(A: PairSet, i: int) -> tuple[PairSet | NotAPairSet, PairSet | NotAPairSet]:
    return rho_set(A, i, 0), rho_set(A, i, 1)


def all_pairs(n: int, kind: str = "any") -> list[tuple[int, int]]:
    """All pairs of V_n as ``(u, v)`` with ``u <= v``; ``kind`` is any, odd, or nondegenerate."""
    out = []
    N = 1 << n
    for u in range(N):
        for v in range(u, N):
            d = (u ^ v).bit_count()
            if kind == "odd" and d % 2 == 0:
                continue
            if kind == "nondegenerate" and d == 0:
                continue
            out.append((u, v))
    return out
