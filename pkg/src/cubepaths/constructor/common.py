from __future__ import annotations

from ..hypercube import lex_key, rho_bits
from ..pairset import PairSet, PairSetError, find_merge_script, iota_set, replay, validate_pairset
from .trace import LIFT, Trace


class Refuted(Exception):
    def __init__(self, certificate: str, configuration: str | None = None, detail: str = ""):
        super().__init__(detail or certificate)
        self.certificate = certificate
        self.configuration = configuration


class OutOfCatalogue(Exception):
    pass


class ConstructionError(RuntimeError):
    """A case of a proof found no admissible choice; indicates a bug."""


def side(p, i: int) -> int | None:
    """Common value of coordinate ``i`` on both ends, ``None`` if the pair crosses."""
    ka, kb = p[0] >> i & 1, p[1] >> i & 1
    return ka if ka == kb else None


def ends_by_side(p, i: int, k: int) -> tuple[int, int]:
    """``(end on side k, other end)`` of a pair crossing ``i``."""
    a, b = p
    return (a, b) if a >> i & 1 == k else (b, a)


def half(pairs, i: int, k: int, n: int) -> PairSet | None:
    """Project pairs lying on side ``k`` of ``i``; ``None`` if they are not a pair-set."""
    try:
        return validate_pairset(
            [(rho_bits(a, i, k), rho_bits(b, i, k)) for a, b in pairs], n - 1
        )
    except PairSetError:
        return None


def pairset_or_none(pairs, n: int) -> PairSet | None:
    try:
        return validate_pairset(pairs, n)
    except PairSetError:
        return None


def side_vertices(n: int, i: int, k: int) -> list[int]:
    vs = [v for v in range(1 << n) if v >> i & 1 == k]
    return sorted(vs, key=lambda v: lex_key(v, n))


def lift_node(A: PairSet, i: int, t0: Trace, t1: Trace, note: str = "", script=None):
    """Lift ``t0`` (side 0 of ``i``) and ``t1`` (side 1) and merge back to ``A``."""
    B = iota_set(t0.instance, t1.instance, i, 0)
    if script is None:
        script = find_merge_script(B, A)
        if script is None:
            return None
    elif replay(B, script) != A:
        return None
    return Trace(LIFT, A, i, [t0, t1], tuple(script), note=note)


def lift_sides(A: PairSet, i: int, k: int, t_k: Trace, t_other: Trace, note: str = ""):
    if k == 0:
        return lift_node(A, i, t_k, t_other, note)
    return lift_node(A, i, t_other, t_k, note)
