"""Constructions in Q_4: three odd pairs, and four odd pairs with three edge-pairs.

Every builder splits Q_4 along a coordinate, solves the two Q_3 halves
(possibly after cutting or relabelling a path) and merges the lifted paths
back into the requested pairs.  The merging itself is left to
:func:`~cubepaths.pairset.find_merge_script`, so each builder only has to
describe the two halves.
"""
from __future__ import annotations

from itertools import combinations, permutations

from ..connector import orient
from ..hypercube import chi, format_bits, rho_bits
from ..pairset import (
    PairSet,
    SixCycleObstruction,
    enc_mask,
    find_completion,
    halves,
    is_diminishable,
    lies_on_six_cycle,
    separating_coordinate,
    sigma,
)
from .common import (
    ConstructionError,
    Refuted,
    ends_by_side,
    half,
    lift_node,
    lift_sides,
    pairset_or_none,
    side,
    side_vertices,
)
from .trace import HAMILTONIAN, LIFT, SPLIT, TRIVIAL, Trace, realize
from .ops import trivial_connector


def _sub(A: PairSet | None) -> Trace | None:
    """Solve a Q_3 sub-instance; ``None`` when it is invalid or refuted."""
    if A is None:
        return None
    from .solver import construct

    try:
        return construct(A)
    except Refuted:
        return None


def _trivial(A: PairSet | None) -> Trace | None:
    if A is None or trivial_connector(A) is None:
        return None
    return Trace(TRIVIAL, A)


# ---------------------------------------------------------------- three pairs


def three_pairs(A: PairSet) -> Trace:
    for build in (_by_completion, _by_two_zero, _by_one_zero):
        t = build(A)
        if t is not None:
            return t
    raise ConstructionError(f"no construction applies to {A}")


def _small_halves(B: PairSet, i: int) -> bool:
    h0, h1 = halves(B, i)
    return all(isinstance(h, PairSet) and 1 <= len(h.pairs) <= 2 for h in (h0, h1))


def _by_completion(A: PairSet) -> Trace | None:
    """Some coordinate has pairs completely on both sides: complete it and split."""
    for i in range(4):
        s = sigma(A, i)
        if not (s.n0 and s.n1):
            continue
        found = find_completion(A, accept=_small_halves, coordinates=[i])
        if found is None:
            continue
        B, script = found
        h0, h1 = halves(B, i)
        t0, t1 = _sub(h0), _sub(h1)
        if t0 is None or t1 is None:
            continue
        t = lift_node(A, i, t0, t1, note="completion", script=script.steps)
        if t is not None:
            return t
    return None


def _profiles(A: PairSet, here: int, there: int):
    """Yield ``(i, k, complete_on_k, crossing)`` with the requested counts."""
    for i in range(4):
        for k in (0, 1):
            on_k = [p for p in A.pairs if side(p, i) == k]
            on_o = [p for p in A.pairs if side(p, i) == 1 - k]
            cross = [p for p in A.pairs if side(p, i) is None]
            if len(on_k) == here and not on_o and len(cross) == there:
                yield i, k, on_k, cross


def _by_two_zero(A: PairSet) -> Trace | None:
    for i, k, on_k, (p2,) in _profiles(A, 2, 1):
        t = _two_zero(A, i, k, on_k, p2)
        if t is not None:
            return t
    return None


def _two_zero(A: PairSet, i: int, k: int, on_k, p2) -> Trace | None:
    o = 1 - k
    a2, b2 = ends_by_side(p2, i, k)
    if any(p.is_edge for p in on_k):
        # route the crossing pair one step inside side k, then across
        for j in range(4):
            if j == i:
                continue
            g = a2 ^ (1 << j)
            if A.cover >> g & 1:
                continue
            hk = half(list(on_k) + [(a2, g)], i, k, 4)
            if hk is None or not is_diminishable(hk):
                continue
            ho = half([(g ^ (1 << i), b2)], i, o, 4)
            tk = _sub(hk)
            if ho is None or tk is None:
                continue
            t = lift_sides(A, i, k, tk, Trace(HAMILTONIAN, ho), note="(2,0) via an edge-pair")
            if t is not None:
                return t

    a1 = half(on_k, i, k, 4)
    t1 = _sub(a1)
    if t1 is None:
        return None
    C1 = realize(t1)
    a = rho_bits(a2, i, k)
    b = rho_bits(b2, i, o)
    (key, path), = [(p, q) for p, q in C1.items() if a in q]
    rest = [p for p in a1.pairs if p != key]
    for P in (path, path[::-1]):
        pos = P.index(a)
        if pos == 0:
            continue
        for L in range(1, len(P) - pos - 1, 2):
            z, v, z2 = P[pos - 1], P[pos + L], P[pos + L + 1]
            if len({z, z2, v, b}) < 4:
                continue
            a_cut = pairset_or_none(rest + [(P[0], z), (a, v), (z2, P[-1])], 3)
            a_far = pairset_or_none([(z, z2), (v, b)], 3)
            if a_cut is None or a_far is None:
                continue
            t_far = _sub(a_far)
            if t_far is None:
                continue
            t = lift_sides(A, i, k, Trace(SPLIT, a_cut, children=[t1]), t_far, note="(2,0) cut path")
            if t is not None:
                return t
        if len(P) == 4 and P[1] == a and P[3] == b:
            kap, _, v, kap2 = P
            a_cut = pairset_or_none(rest + [(kap, kap), (a, a), (v, kap2)], 3)
            a_far = pairset_or_none([(kap, v), (a, kap2)], 3)
            if a_cut is None or a_far is None:
                continue
            t_far = _sub(a_far)
            if t_far is None:
                continue
            t = lift_sides(
                A, i, k, Trace(SPLIT, a_cut, children=[t1]), t_far, note="(2,0) short path"
            )
            if t is not None:
                return t
    return None


def _six_cycles(free: list[int]):
    """Hamiltonian cycles of the subgraph of Q_3 induced by six vertices."""
    start = free[0]
    seen = set()
    for perm in permutations(free[1:]):
        cyc = (start,) + perm
        if all((cyc[t] ^ cyc[(t + 1) % 6]).bit_count() == 1 for t in range(6)):
            canon = min(cyc[1], cyc[-1])
            if canon == cyc[1]:
                if cyc in seen:
                    continue
                seen.add(cyc)
                yield cyc


def _by_one_zero(A: PairSet) -> Trace | None:
    for i, k, (p0,), (p1, p2) in _profiles(A, 1, 2):
        for q1, q2 in ((p1, p2), (p2, p1)):
            t = _one_zero(A, i, k, p0, q1, q2)
            if t is not None:
                return t
    return None


def _one_zero(A: PairSet, i: int, k: int, p0, p1, p2) -> Trace | None:
    o = 1 - k
    x0, y0 = (rho_bits(v, i, k) for v in p0)
    a1, b1 = ends_by_side(p1, i, k)
    a2, b2 = ends_by_side(p2, i, k)
    a1, a2 = rho_bits(a1, i, k), rho_bits(a2, i, k)
    b1, b2 = rho_bits(b1, i, o), rho_bits(b2, i, o)

    # a six-cycle through the remaining vertices of side k
    free = [v for v in range(8) if v not in (x0, y0)]
    for cyc in _six_cycles(free):
        for shift in (0, 1):
            mate = {}
            for t in range(shift, 6, 2):
                u, w = cyc[t], cyc[(t + 1) % 6]
                mate[u], mate[w] = w, u
            g1, g2 = mate[a1], mate[a2]
            if g1 == a2:
                continue
            hk = pairset_or_none([(x0, y0), (a1, g1), (a2, g2)], 3)
            ho = pairset_or_none([(g1, b1), (g2, b2)], 3)
            if hk is None or ho is None or not is_diminishable(hk):
                continue
            tk, to = _sub(hk), _sub(ho)
            if tk is None or to is None:
                continue
            t = lift_sides(A, i, k, tk, to, note="(1,0) six-cycle")
            if t is not None:
                return t

    # join the two crossing ends on side k, then cut that path at an edge
    if chi(a1) == chi(a2):
        return None
    a_join = pairset_or_none([(x0, y0), (a1, a2)], 3)
    if a_join is None:
        return None
    candidates = []
    t_join = _sub(a_join)
    if t_join is not None:
        candidates.append(t_join)
    if (x0 ^ y0).bit_count() == 1 and (a1 ^ a2).bit_count() == 1:
        j = separating_coordinate(a_join)
        if not isinstance(j, SixCycleObstruction):
            h0 = half([p for p in a_join.pairs if side(p, j) == 0], j, 0, 3)
            h1 = half([p for p in a_join.pairs if side(p, j) == 1], j, 1, 3)
            candidates.append(
                Trace(
                    LIFT,
                    a_join,
                    j,
                    [Trace(HAMILTONIAN, h0), Trace(HAMILTONIAN, h1)],
                    note="two four-cycles",
                )
            )
    rest = [p for p in a_join.pairs if set(p) != {a1, a2}]
    for tj in candidates:
        C = realize(tj)
        (Q,) = [orient(q, a1) for q in C.values() if a1 in q]
        for t in range(len(Q) - 1):
            z, v = Q[t], Q[t + 1]
            hits = len({z, v} & {b1, b2})
            case_a = chi(z) != chi(a1) and hits == 0
            case_b = chi(z) == chi(a1) and hits == 1
            case_c = len(Q) == 2 and hits == 0
            if not (case_a or case_b or case_c):
                continue
            a_cut = pairset_or_none(rest + [(a1, z), (v, a2)], 3)
            a_far = pairset_or_none([(z, b1), (v, b2)], 3)
            if a_cut is None or a_far is None:
                continue
            t_far = _sub(a_far)
            if t_far is None:
                continue
            node = lift_sides(
                A, i, k, Trace(SPLIT, a_cut, children=[tj]), t_far, note="(1,0) cut edge"
            )
            if node is not None:
                return node
    return None


# ----------------------------------------------------------------- four pairs


def four_pairs(A: PairSet) -> Trace:
    """Four odd pairs, at least three of them edges, nothing encompassed."""
    edges = [p for p in A.pairs if p.is_edge]
    for triple in combinations(edges, 3):
        (p3,) = [p for p in A.pairs if p not in triple]
        for i in range(4):
            sides = [side(p, i) for p in triple]
            if None in sides:
                continue
            for k in (0, 1):
                if sides.count(k) != 2:
                    continue
                pair_k = [p for p, s in zip(triple, sides) if s == k]
                (lonely,) = [p for p, s in zip(triple, sides) if s != k]
                t = _star(A, i, k, pair_k, lonely, p3)
                if t is not None:
                    return t
    for triple in combinations(edges, 3):
        if not lies_on_six_cycle(triple, 4):
            continue
        (p3,) = [p for p in A.pairs if p not in triple]
        t = _six_cycle(A, triple, p3)
        if t is not None:
            return t
    raise ConstructionError(f"no construction applies to {A}")


def _star(A: PairSet, i: int, k: int, pair_k, lonely, p3) -> Trace | None:
    o = 1 - k
    s3 = side(p3, i)
    if s3 is not None:
        hk = half(list(pair_k) + ([p3] if s3 == k else []), i, k, 4)
        ho = half([lonely] + ([p3] if s3 == o else []), i, o, 4)
        if is_diminishable(hk) and is_diminishable(ho):
            tk, to = _sub(hk), _sub(ho)
            if tk is not None and to is not None:
                t = lift_sides(A, i, k, tk, to, note="(*) diminishable halves")
                if t is not None:
                    return t
        if s3 != k:
            return None
        _, enc = enc_mask(hk.cover, 3)
        gam = [v for v in range(8) if enc >> v & 1]
        if len(gam) != 2:
            return None
        x3, y3 = rho_bits(p3[0], i, k), rho_bits(p3[1], i, k)
        rest = [p for p in hk.pairs if set(p) != {x3, y3}]
        lone = half([lonely], i, o, 4).pairs[0]
        for g, g2 in (gam, gam[::-1]):
            for x, y in ((x3, y3), (y3, x3)):
                tk = _trivial(pairset_or_none(rest + [(x, g), (y, g2)], 3))
                to = _sub(pairset_or_none([lone, (g, g2)], 3))
                if tk is None or to is None:
                    continue
                t = lift_sides(A, i, k, tk, to, note="(*) encompassed pair rerouted")
                if t is not None:
                    return t
        return None
    a3, b3 = ends_by_side(p3, i, k)
    for g in side_vertices(4, i, k):
        g2 = g ^ (1 << i)
        if A.cover >> g & 1 or A.cover >> g2 & 1 or chi(g) == chi(a3):
            continue
        hk = half(list(pair_k) + [(a3, g)], i, k, 4)
        if hk is None or not is_diminishable(hk):
            continue
        ho = half([lonely, (g2, b3)], i, o, 4)
        tk, to = _sub(hk), _sub(ho)
        if tk is None or to is None:
            continue
        t = lift_sides(A, i, k, tk, to, note="(*) crossing pair")
        if t is not None:
            return t
    return None


def _six_cycle(A: PairSet, triple, p3) -> Trace | None:
    dirs = {(p[0] ^ p[1]).bit_length() - 1 for p in triple}
    (i,) = set(range(4)) - dirs
    k = side(triple[0], i)
    o = 1 - k
    hk = half(triple, i, k, 4)
    s3 = side(p3, i)
    if s3 == k:
        x, y = (rho_bits(v, i, k) for v in p3)
        tk = _trivial(pairset_or_none(list(hk.pairs) + [(x, x), (y, y)], 3))
        if tk is None:
            return None
        # the far side is one Hamiltonian path between the shadows of p3's ends
        to = Trace(HAMILTONIAN, pairset_or_none([(x, y)], 3))
        return lift_sides(A, i, k, tk, to, note="six-cycle (4,0)")
    rest = [v for v in range(8) if not hk.cover >> v & 1]
    if s3 == o:
        far = half([p3], i, o, 4).pairs[0]
        for pr in hk.pairs:
            others = [q for q in hk.pairs if q != pr]
            for x, y in ((pr.a, pr.b), (pr.b, pr.a)):
                for g, g2 in (rest, rest[::-1]):
                    tk = _trivial(pairset_or_none(others + [(x, g), (y, g2)], 3))
                    to = _sub(pairset_or_none([(g, g2), far], 3))
                    if tk is None or to is None:
                        continue
                    t = lift_sides(A, i, k, tk, to, note="six-cycle (3,1)")
                    if t is not None:
                        return t
        return None
    a3, b3 = ends_by_side(p3, i, k)
    a, b = rho_bits(a3, i, k), rho_bits(b3, i, o)
    (g,) = [v for v in rest if v != a]
    for pr in hk.pairs:
        others = [q for q in hk.pairs if q != pr]
        for x, y in ((pr.a, pr.b), (pr.b, pr.a)):
            if y != b:
                continue
            tk = _trivial(pairset_or_none(others + [(x, x), (y, g), (a, a)], 3))
            a_far = pairset_or_none([(a, b), (g, x)], 3)
            if tk is None or a_far is None:
                continue
            to = _sub(a_far)
            if to is None:
                continue
            note = f"six-cycle (3,0), edge-pair {format_bits(x, 3)}-{format_bits(y, 3)} sits over the far end"
            t = lift_sides(A, i, k, tk, to, note=note)
            if t is not None:
                return t
    return None
