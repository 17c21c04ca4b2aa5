"""Lookup into the generated base tables."""
from __future__ import annotations

from ..connector import Connector
from ..pairset import PairSet
from ..symmetry import canonical_form, canonical_key
from .ops import connector_of_paths, map_connector


class NotTabulated(KeyError):
    pass


def _data():
    from . import _tables

    return _tables


def forbidden_name(A: PairSet) -> str | None:
    """Name of the forbidden configuration ``A`` is isomorphic to, if any."""
    forb = _data().FORBIDDEN
    dims = {n for n, _ in forb.values()}
    if A.n not in dims:
        return None
    key = canonical_key(tuple(A.pairs), A.n)
    for name, (n, k) in forb.items():
        if n == A.n and k == key:
            return name
    return None


def forbidden_rep(name: str) -> PairSet:
    from ..pairset import validate_pairset

    n, key = _data().FORBIDDEN[name]
    return validate_pairset(key, n)


def is_tabulated(A: PairSet) -> bool:
    tab = _data().TABLES.get(A.n)
    return tab is not None and canonical_key(tuple(A.pairs), A.n) in tab


def lookup(A: PairSet) -> Connector | None:
    """Tabulated connector of ``A`` (``None`` when the class is refuted)."""
    tab = _data().TABLES.get(A.n)
    if tab is None:
        raise NotTabulated(A.n)
    cf = canonical_form(A)
    if cf.key not in tab:
        raise NotTabulated(str(A))
    paths = tab[cf.key]
    if paths is None:
        return None
    _, C = connector_of_paths(paths, A.n)
    return map_connector(C, cf.witness.inverse(), A.n)
