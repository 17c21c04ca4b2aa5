"""Connectors: one path per pair, jointly partitioning V_n."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from .hypercube import format_bits, lex_key, parse_bits
from .pairset import Pair, PairSet, make_pair

Path = Tuple[int, ...]
Connector = Dict[Pair, Path]

CONNECTABLE = "connectable"
UNCONNECTABLE = "unconnectable"
BUDGET_EXHAUSTED = "budget-exhausted"
UNSUPPORTED = "unsupported"

# certificate kinds carried by an unconnectable verdict
EXHAUSTED_SEARCH = "exhausted-search"
PARITY = "parity-obstruction"
ENCOMPASSMENT = "encompassment-obstruction"
FORBIDDEN = "forbidden-configuration"


@dataclass
class Verdict:
    status: str
    connector: Connector | None = None
    certificate: str | None = None
    configuration: str | None = None
    nodes: int = 0
    trace: Any = None
    detail: str = ""

    @property
    def connectable(self) -> bool:
        return self.status == CONNECTABLE

    @property
    def decided(self) -> bool:
        return self.status in (CONNECTABLE, UNCONNECTABLE)


@dataclass(frozen=True)
class Violation:
    clause: str
    detail: str
    pair: Pair | None = None
    vertex: int | None = None


def verify_connector(A: PairSet, C: Connector) -> Violation | None:
    """Check a connector; ``None`` means every clause holds."""
    n = A.n
    fmt = lambda v: format_bits(v, n)  # noqa: E731
    if set(C) != set(A.pairs):
        extra = set(C) ^ set(A.pairs)
        p = min(extra)
        return Violation("pairs", f"connector and pair-set disagree on {p.format(n)}", pair=p)
    owner: dict[int, Pair] = {}
    for p in A.pairs:
        path = C[p]
        if not path or {path[0], path[-1]} != {p.a, p.b}:
            return Violation("endpoints", f"path for {p.format(n)} has wrong ends", pair=p)
        if p.degenerate and len(path) != 1:
            return Violation("endpoints", f"degenerate pair {p.format(n)} needs a singleton path", pair=p)
        for x, y in zip(path, path[1:]):
            if (x ^ y).bit_count() != 1:
                return Violation(
                    "adjacency", f"{fmt(x)} and {fmt(y)} are not adjacent", pair=p, vertex=y
                )
        for v in path:
            if v < 0 or v >> n:
                return Violation("cover", f"vertex {v} outside Q_{n}", pair=p, vertex=v)
            if v in owner:
                return Violation(
                    "disjoint", f"vertex {fmt(v)} used twice", pair=p, vertex=v
                )
            owner[v] = p
    for v in range(1 << n):
        if v not in owner:
            return Violation("cover", f"vertex {fmt(v)} not covered", vertex=v)
    return None


def orient(path: Path, start: int) -> Path:
    if path[0] == start:
        return tuple(path)
    if path[-1] == start:
        return tuple(reversed(path))
    raise ValueError(f"{start} is not an end of the path")


def connector_from_paths(paths, n: int) -> Connector:
    """Build a connector keyed by the pairs formed by each path's ends."""
    out: Connector = {}
    for path in paths:
        path = tuple(path)
        p = make_pair(path[0], path[-1], n)
        out[p] = orient(path, p.a)
    return out


def format_connector(C: Connector, n: int) -> str:
    """Semicolon-separated paths, each a comma-separated vertex list."""
    order = sorted(C, key=lambda p: (lex_key(p.a, n), lex_key(p.b, n)))
    return ";".join(",".join(format_bits(v, n) for v in C[p]) for p in order)


def parse_connector(text: str, n: int) -> list[Path]:
    """Inverse of :func:`format_connector`; vertices must all have length ``n``."""
    paths = []
    for chunk in text.replace(" ", "").split(";"):
        if not chunk:
            continue
        path = []
        for tok in chunk.split(","):
            m, bits = parse_bits(tok)
            if m != n:
                raise ValueError(f"vertex {tok!r} does not have {n} coordinates")
            path.append(bits)
        paths.append(tuple(path))
    if not paths:
        raise ValueError("empty connector literal")
    return paths
