"""Construction traces: the tree of rules that produced a connector.

Each node names a rule and the pair-set it solves.  :func:`replay`
re-executes the tree from scratch; :func:`realize` does the same but
caches results on the nodes, which the builders use while searching.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..connector import Connector
from ..pairset import MergeStep, PairSet, iota_set, rho_set
from ..symmetry import Automorphism
from . import tables
from .gray import hamiltonian_path
from .ops import apply_script, lift_connectors, map_connector, restrict, trivial_connector

HAMILTONIAN = "hamiltonian-path"
TRIVIAL = "trivial-cover"
TABLE = "table"
LIFT = "lift"
SPLIT = "split"
RELABEL = "relabel"


class TraceError(RuntimeError):
    pass


@dataclass(eq=False)
class Trace:
    rule: str
    instance: PairSet
    coordinate: int | None = None
    children: list["Trace"] = field(default_factory=list)
    script: tuple[MergeStep, ...] = ()
    automorphism: Automorphism | None = None
    note: str = ""
    _connector: Connector | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        out = {"rule": self.rule, "instance": self.instance.format()}
        if self.coordinate is not None:
            out["coordinate"] = self.coordinate
        if self.note:
            out["note"] = self.note
        if self.script:
            out["merges"] = len(self.script)
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out

    def lines(self, depth: int = 0) -> list[str]:
        head = f"{'  ' * depth}{self.rule}"
        if self.coordinate is not None:
            head += f" i={self.coordinate}"
        head += f" {self.instance}"
        if self.note:
            head += f"  [{self.note}]"
        out = [head]
        for c in self.children:
            out += c.lines(depth + 1)
        return out


def _compute(t: Trace, sub) -> Connector:
    A = t.instance
    n = A.n
    if t.rule == HAMILTONIAN:
        (p,) = A.pairs
        return {p: hamiltonian_path(p.a, p.b, n)}
    if t.rule == TRIVIAL:
        C = trivial_connector(A)
        if C is None:
            raise TraceError("pairs are not a trivial cover")
        return C
    if t.rule == TABLE:
        C = tables.lookup(A)
        if C is None:
            raise TraceError("table marks this class as refuted")
        return C
    if t.rule == LIFT:
        i = t.coordinate
        low, high = t.children
        C = lift_connectors(sub(low), sub(high), i, 0, low.instance, high.instance)
        return apply_script(C, t.script, n)
    if t.rule == SPLIT:
        (child,) = t.children
        return restrict(sub(child), A)
    if t.rule == RELABEL:
        (child,) = t.children
        return map_connector(sub(child), t.automorphism.inverse(), n)
    raise TraceError(f"unknown rule {t.rule!r}")


def realize(t: Trace) -> Connector:
    if t._connector is None:
        t._connector = _compute(t, realize)
    return t._connector


def replay(t: Trace) -> Connector:
    """Rebuild the connector from the trace, ignoring cached results."""
    return _compute(t, replay)


def check_shape(t: Trace) -> None:
    """Structural sanity: lifted halves really are the halves of the merged set."""
    if t.rule == LIFT:
        low, high = t.children
        B = iota_set(low.instance, high.instance, t.coordinate, 0)
        if rho_set(B, t.coordinate, 0) != low.instance:
            raise TraceError("lift halves inconsistent")
    for c in t.children:
        check_shape(c)
