"""Exhaustive connectability search for small hypercubes.

The search grows the path of the first unfinished pair one vertex at a
time, always trying the smallest free neighbour first.  Three prunings
keep it tractable up to Q_5:

* every unfinished pair must still be joinable through free vertices,
* every component of the free vertices must be reachable by both ends of
  some unfinished pair,
* every free vertex needs two usable neighbours.

Failed states ``(pair index, frontier, free set)`` are memoised.  The
signed parity count of the free vertices is fixed by the balance of the
pair-set and is invariant under extension, so it is checked once up front.
"""
from __future__ import annotations

import sys

from .connector import (
    BUDGET_EXHAUSTED,
    CONNECTABLE,
    ENCOMPASSMENT,
    EXHAUSTED_SEARCH,
    PARITY,
    UNCONNECTABLE,
    Connector,
    Verdict,
    verify_connector,
)
from .hypercube import DimensionError, neighbor_masks
from .pairset import PairSet, enc_mask

ORACLE_CAP = 5
DEFAULT_BUDGET = 10**8

__all__ = ["oracle_solve", "verify_connector", "quick_certificate", "ORACLE_CAP"]


class _Budget(Exception):
    pass


def quick_certificate(A: PairSet) -> str | None:
    """Parity or encompassment refutation, when one applies."""
    if A.chi != 0:
        return PARITY
    if all(p.is_odd for p in A.pairs) and enc_mask(A.cover, A.n)[1]:
        return ENCOMPASSMENT
    return None


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def oracle_solve(
    A: PairSet, budget: int = DEFAULT_BUDGET, certificates: bool = True
) -> Verdict:
    n = A.n
    if n > ORACLE_CAP:
        raise DimensionError(f"oracle is capped at n={ORACLE_CAP}")
    if certificates:
        cert = quick_certificate(A)
        if cert is not None:
            return Verdict(UNCONNECTABLE, certificate=cert)
    if A.chi != 0:
        # a connector would make the pair-set balanced
        return Verdict(UNCONNECTABLE, certificate=EXHAUSTED_SEARCH)

    nb = neighbor_masks(n)
    full = (1 << (1 << n)) - 1
    degenerate = [p for p in A.pairs if p.degenerate]
    active = [p for p in A.pairs if not p.degenerate]
    ends = [(p.a, p.b) for p in active]
    free0 = full & ~A.cover
    k = len(ends)
    failed: set[tuple[int, int, int]] = set()
    paths: list[list[int]] = [[s] for s, _ in ends]
    nodes = 0

    def feasible(j: int, f: int, free: int) -> bool:
        open_ends = [(f, ends[j][1])] + ends[j + 1 :]
        endmask = 0
        for x, y in open_ends:
            endmask |= (1 << x) | (1 << y)
        usable = free | endmask
        for v in _bits(free):
            if (nb[v] & usable).bit_count() < 2:
                return False
        joined = [nb[x] >> y & 1 for x, y in open_ends]
        rest = free
        while rest:
            low = rest & -rest
            comp = low
            front = low
            while front:
                grow = 0
                for u in _bits(front):
                    grow |= nb[u]
                grow &= rest & ~comp
                comp |= grow
                front = grow
            rest &= ~comp
            served = False
            for idx, (x, y) in enumerate(open_ends):
                if nb[x] & comp and nb[y] & comp:
                    served = True
                    joined[idx] = 1
            if not served:
                return False
        return all(joined)

    def search(j: int, f: int, free: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        key = (j, f, free)
        if key in failed:
            return False
        if not feasible(j, f, free):
            failed.add(key)
            return False
        t = ends[j][1]
        for w in _bits(nb[f] & (free | (1 << t))):
            paths[j].append(w)
            if w == t:
                if j + 1 == k:
                    if free == 0:
                        return True
                elif search(j + 1, ends[j + 1][0], free):
                    return True
            elif search(j, w, free & ~(1 << w)):
                return True
            paths[j].pop()
        failed.add(key)
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * (1 << n) + 100))
    try:
        found = k > 0 and search(0, ends[0][0], free0)
    except _Budget:
        return Verdict(BUDGET_EXHAUSTED, nodes=nodes, detail=f"node budget {budget} exhausted")
    finally:
        sys.setrecursionlimit(limit)

    if not found:
        return Verdict(UNCONNECTABLE, certificate=EXHAUSTED_SEARCH, nodes=nodes)
    C: Connector = {p: (p.a,) for p in degenerate}
    for p, path in zip(active, paths):
        C[p] = tuple(path)
    bad = verify_connector(A, C)
    if bad is not None:  # pragma: no cover - would be a search bug
        raise AssertionError(f"oracle produced an invalid connector: {bad}")
    return Verdict(CONNECTABLE, connector=C, nodes=nodes)
