"""Connector surgery: lifting halfcube connectors, merging paths, cutting paths."""
from __future__ import annotations

from ..connector import Connector, orient, verify_connector
from ..hypercube import iota_bits
from ..pairset import MergeStep, PairSet, iota_set, make_pair, validate_pairset
from ..symmetry import Automorphism


class ConnectorError(ValueError):
    pass


def lift_connectors(
    C0: Connector, C1: Connector, i: int, k: int, A0: PairSet, A1: PairSet
) -> Connector:
    """Connector of ``iota_set(A0, A1, i, k)`` from connectors of the two halves.

    ``C0`` covers the halfcube ``v(i) = k`` and ``C1`` the other one.
    """
    for A, C in ((A0, C0), (A1, C1)):
        bad = verify_connector(A, C)
        if bad is not None:
            raise ConnectorError(f"half connector invalid: {bad.clause}: {bad.detail}")
    n = A0.n + 1
    out: Connector = {}
    for C, side in ((C0, k), (C1, 1 - k)):
        for path in C.values():
            lifted = tuple(iota_bits(v, i, side) for v in path)
            p = make_pair(lifted[0], lifted[-1], n)
            out[p] = orient(lifted, p.a)
    assert set(out) == set(iota_set(A0, A1, i, k).pairs)
    return out


def apply_merge_to_connector(C: Connector, step: MergeStep, n: int) -> Connector:
    """Join the paths ending at ``step.beta`` and ``step.beta2`` across their edge."""
    if (step.beta ^ step.beta2).bit_count() != 1:
        raise ConnectorError("bridge is not an edge")
    p = make_pair(step.alpha, step.beta, n)
    q = make_pair(step.alpha2, step.beta2, n)
    if p not in C or q not in C or p == q:
        raise ConnectorError("merge ends are not ends of two distinct paths")
    first = orient(C[p], step.alpha)
    second = orient(C[q], step.beta2)
    if first[-1] != step.beta:
        raise ConnectorError("beta is not an end of its path")
    out = {key: path for key, path in C.items() if key != p and key != q}
    joined = first + second
    r = make_pair(joined[0], joined[-1], n)
    out[r] = orient(joined, r.a)
    return out


def apply_script(C: Connector, steps, n: int) -> Connector:
    for s in steps:
        C = apply_merge_to_connector(C, s, n)
    return C


def restrict(C: Connector, target: PairSet) -> Connector:
    """Cut the paths of ``C`` into the sub-paths joining the pairs of ``target``."""
    where: dict[int, tuple[tuple[int, ...], int]] = {}
    for path in C.values():
        for pos, v in enumerate(path):
            where[v] = (path, pos)
    out: Connector = {}
    for p in target.pairs:
        (pa, ia), (pb, ib) = where[p.a], where[p.b]
        if pa is not pb:
            raise ConnectorError(f"{p.format(target.n)} is not on a single path")
        lo, hi = sorted((ia, ib))
        out[p] = orient(pa[lo : hi + 1], p.a)
    bad = verify_connector(target, out)
    if bad is not None:
        raise ConnectorError(f"cut does not cover the cube: {bad.detail}")
    return out


def map_connector(C: Connector, f: Automorphism, n: int) -> Connector:
    out: Connector = {}
    for path in C.values():
        img = tuple(f(v) for v in path)
        p = make_pair(img[0], img[-1], n)
        out[p] = orient(img, p.a)
    return out


def trivial_connector(A: PairSet) -> Connector | None:
    """When the pairs are edges and singletons covering V_n, they are their own paths."""
    if A.cover != (1 << (1 << A.n)) - 1:
        return None
    if not all(p.degenerate or p.is_edge for p in A.pairs):
        return None
    return {p: (p.a,) if p.degenerate else (p.a, p.b) for p in A.pairs}


def connector_of_paths(paths, n: int) -> tuple[PairSet, Connector]:
    C: Connector = {}
    for path in paths:
        p = make_pair(path[0], path[-1], n)
        C[p] = orient(tuple(path), p.a)
    return validate_pairset(list(C), n), C
