"""Constructions for two odd pairs (any n) and for diminishable pair-sets of Q_3."""
from __future__ import annotations

from ..hypercube import chi
from ..pairset import PairSet, SixCycleObstruction, separating_coordinate
from . import tables
from .common import half, lift_node, lift_sides, side, side_vertices
from .trace import HAMILTONIAN, TABLE, TRIVIAL, Trace


def _sub(A: PairSet) -> Trace:
    from .solver import construct

    return construct(A)


def two_odd_pairs(A: PairSet) -> Trace | None:
    """Connector of two odd pairs, by induction on the dimension.

    Split on a coordinate the first pair crosses.  If the second pair stays
    on one side, the first pair is routed through that side to a new end
    ``u`` and finishes with a Hamiltonian path of the other halfcube.  If
    both pairs cross, each side receives two odd pairs ``a-x, c-y`` and
    ``x'-b, y'-d``.  Q_3 falls back on the table when no cut point works.
    """
    n = A.n
    p, q = A.pairs
    if n == 2:
        return Trace(TRIVIAL, A)
    for first, second in ((p, q), (q, p)):
        for i in range(n):
            if side(first, i) is not None:
                continue
            t = _split_two(A, first, second, i)
            if t is not None:
                return t
    if tables.is_tabulated(A):
        return Trace(TABLE, A, note="odd pairs, inspected")
    return None


def _split_two(A: PairSet, ab, cd, i: int) -> Trace | None:
    n = A.n
    s = side(cd, i)
    if s is not None:
        a, b = (ab[0], ab[1]) if ab[0] >> i & 1 == s else (ab[1], ab[0])
        c, d = cd
        for u in side_vertices(n, i, s):
            if u in (a, c, d) or chi(u) == chi(a) or u ^ (1 << i) == b:
                continue
            h_s = half([(a, u), (c, d)], i, s, n)
            h_o = half([(u ^ (1 << i), b)], i, 1 - s, n)
            if h_s is None or h_o is None:
                continue
            t_s = _sub(h_s)
            t = lift_sides(A, i, s, t_s, Trace(HAMILTONIAN, h_o), note="second pair on one side")
            if t is not None:
                return t
        return None
    a, b = (ab[0], ab[1]) if ab[0] >> i & 1 == 0 else (ab[1], ab[0])
    c, d = (cd[0], cd[1]) if cd[0] >> i & 1 == 0 else (cd[1], cd[0])
    e = 1 << i
    cands = side_vertices(n, i, 0)
    for x in cands:
        if x in (a, c) or chi(x) == chi(a) or x ^ e in (b, d):
            continue
        for y in cands:
            if y in (a, c, x) or chi(y) == chi(c) or y ^ e in (b, d):
                continue
            h0 = half([(a, x), (c, y)], i, 0, n)
            h1 = half([(x ^ e, b), (y ^ e, d)], i, 1, n)
            if h0 is None or h1 is None:
                continue
            t = lift_node(A, i, _sub(h0), _sub(h1), note="both pairs cross")
            if t is not None:
                return t
    return None


def diminishable_q3(A: PairSet) -> Trace | None:
    """Three odd pairs in Q_3 with at least two edge-pairs and nothing encompassed."""
    edges = [p for p in A.pairs if p.is_edge]
    if len(edges) == 3:
        i = separating_coordinate(A)
        if isinstance(i, SixCycleObstruction):
            return None
        h0 = half([p for p in A.pairs if side(p, i) == 0], i, 0, 3)
        h1 = half([p for p in A.pairs if side(p, i) == 1], i, 1, 3)
        return lift_node(A, i, _sub(h0), _sub(h1), note="separating coordinate")
    if tables.is_tabulated(A):
        return Trace(TABLE, A, note="two edge-pairs and a diametrical pair, inspected")
    return None
