"""Constructive solver: dispatch a pair-set to the construction that covers it."""
from __future__ import annotations

from ..connector import (
    CONNECTABLE,
    EXHAUSTED_SEARCH,
    FORBIDDEN,
    UNCONNECTABLE,
    UNSUPPORTED,
    Verdict,
    verify_connector,
)
from ..oracle import ORACLE_CAP, DEFAULT_BUDGET, oracle_solve, quick_certificate
from ..pairset import PairSet, enc_mask, is_diminishable
from . import tables
from .common import ConstructionError, OutOfCatalogue, Refuted
from .dim4 import four_pairs, three_pairs
from .ops import trivial_connector
from .small import diminishable_q3, two_odd_pairs
from .trace import HAMILTONIAN, TABLE, TRIVIAL, Trace, realize


def in_catalogue(A: PairSet) -> bool:
    """Whether :func:`solve` decides ``A`` without falling back on search."""
    n, size = A.n, len(A.pairs)
    odd = all(p.is_odd for p in A.pairs)
    if quick_certificate(A) is not None:
        return True
    if odd and size <= 2:
        return True
    if n <= 2:
        return True
    if n == 3:
        return size <= 2 or is_diminishable(A)
    if n == 4 and odd:
        if size <= 3:
            return True
        edges = sum(p.is_edge for p in A.pairs)
        return size == 4 and edges >= 3 and not enc_mask(A.cover, 4)[1]
    return False


def _table(A: PairSet) -> Trace:
    if tables.lookup(A) is None:
        raise Refuted(EXHAUSTED_SEARCH, detail="tabulated as unconnectable")
    return Trace(TABLE, A)


def construct(A: PairSet) -> Trace:
    """Construction trace for ``A``.

    Raises :class:`Refuted` when a certificate applies and
    :class:`OutOfCatalogue` when no construction covers ``A``.
    """
    cert = quick_certificate(A)
    if cert is not None:
        raise Refuted(cert)
    name = tables.forbidden_name(A)
    if name is not None:
        raise Refuted(FORBIDDEN, name)
    if trivial_connector(A) is not None:
        return Trace(TRIVIAL, A)
    n, size = A.n, len(A.pairs)
    odd = all(p.is_odd for p in A.pairs)
    if size == 1 and odd:
        return Trace(HAMILTONIAN, A)
    if n <= 2:
        return _table(A)
    if size == 2 and odd:
        t = two_odd_pairs(A)
        if t is None:
            raise ConstructionError(f"two odd pairs failed on {A}")
        return t
    if n == 3:
        if size <= 2:
            return _table(A)
        if is_diminishable(A):
            t = diminishable_q3(A)
            if t is None:
                raise ConstructionError(f"diminishable construction failed on {A}")
            return t
    if n == 4 and odd:
        if size == 3:
            return three_pairs(A)
        if size == 4 and sum(p.is_edge for p in A.pairs) >= 3:
            return four_pairs(A)
    raise OutOfCatalogue(str(A))


def solve(A: PairSet) -> Verdict:
    """Decide ``A`` constructively; the connector is verified before it is returned."""
    try:
        t = construct(A)
    except Refuted as r:
        return Verdict(UNCONNECTABLE, certificate=r.certificate, configuration=r.configuration)
    except OutOfCatalogue:
        return Verdict(UNSUPPORTED, detail="outside the constructive catalogue")
    C = realize(t)
    bad = verify_connector(A, C)
    if bad is not None:
        raise ConstructionError(f"construction produced an invalid connector: {bad.detail}")
    return Verdict(CONNECTABLE, connector=C, trace=t)


def solve_auto(A: PairSet, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Constructive solver first, exhaustive search for anything it does not cover."""
    v = solve(A)
    if v.status == UNSUPPORTED and A.n <= ORACLE_CAP:
        return oracle_solve(A, budget)
    return v
