"""Vertex arithmetic of the hypercube Q_n.

Coordinate ``i`` of a textual vertex literal is its ``i``-th character read
left to right; internally it is bit ``i`` of an ``int``.  :func:`parse_bits`
and :func:`format_bits` are the only places where that mapping is spelled
out, everything else works on the integer form.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

MAX_DIMENSION = 16


class DimensionError(ValueError):
    """Raised when vertices of different dimensions are combined or a cap is hit."""


class ProjectionError(ValueError):
    """Raised when ``rho`` is applied to a vertex whose coordinate does not match."""


def check_dimension(n: int, cap: int = MAX_DIMENSION) -> None:
    if not 1 <= n <= cap:
        raise DimensionError(f"dimension {n} outside 1..{cap}")


def parse_bits(text: str) -> tuple[int, int]:
    """Return ``(n, bits)`` for a literal such as ``"0110"``."""
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"not a vertex literal: {text!r}")
    check_dimension(len(text))
    bits = 0
    for i, ch in enumerate(text):
        if ch == "1":
            bits |= 1 << i
    return len(text), bits


def format_bits(bits: int, n: int) -> str:
    return "".join("1" if bits >> i & 1 else "0" for i in range(n))


@lru_cache(maxsize=None)
def _lex_table(n: int) -> tuple[int, ...]:
    return tuple(int(format_bits(v, n), 2) for v in range(1 << n))


def lex_key(bits: int, n: int) -> int:
    """Sort key that orders vertices like their textual literals."""
    if n <= 10:
        return _lex_table(n)[bits]
    return int(format_bits(bits, n), 2)


def chi(bits: int) -> int:
    """Parity of a vertex: +1 for an even number of ones, -1 otherwise."""
    return -1 if bits.bit_count() & 1 else 1


def neighbors(bits: int, n: int) -> Iterator[int]:
    for i in range(n):
        yield bits ^ (1 << i)


@lru_cache(maxsize=None)
def neighbor_masks(n: int) -> tuple[int, ...]:
    """``neighbor_masks(n)[v]`` is the bitmask of the neighbours of ``v``."""
    out = []
    for v in range(1 << n):
        m = 0
        for i in range(n):
            m |= 1 << (v ^ (1 << i))
        out.append(m)
    return tuple(out)


def rho_bits(bits: int, i: int, k: int) -> int:
    if (bits >> i) & 1 != k:
        raise ProjectionError(f"coordinate {i} is not {k}")
    low = bits & ((1 << i) - 1)
    return low | ((bits >> (i + 1)) << i)


def iota_bits(bits: int, i: int, k: int) -> int:
    low = bits & ((1 << i) - 1)
    return low | (k << i) | ((bits >> i) << (i + 1))


@dataclass(frozen=True, order=True)
class Vertex:
    n: int
    bits: int

    def __post_init__(self) -> None:
        check_dimension(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit in dimension {self.n}")

    @classmethod
    def parse(cls, text: str) -> "Vertex":
        n, bits = parse_bits(text)
        return cls(n, bits)

    def __str__(self) -> str:
        return format_bits(self.bits, self.n)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: "Vertex") -> "Vertex":
        _same_dim(self, other)
        return Vertex(self.n, self.bits ^ other.bits)


def unit(n: int, i: int) -> Vertex:
    """The string e_i of V_n."""
    return Vertex(n, 1 << i)


def _same_dim(u: Vertex, v: Vertex) -> None:
    if u.n != v.n:
        raise DimensionError(f"dimensions differ: {u.n} vs {v.n}")


def parity(v: Vertex) -> int:
    return chi(v.bits)


def distance_delta(u: Vertex, v: Vertex) -> tuple[int, frozenset[int]]:
    """Hamming distance and the set of coordinates where ``u`` and ``v`` differ."""
    _same_dim(u, v)
    x = u.bits ^ v.bits
    delta = frozenset(i for i in range(u.n) if x >> i & 1)
    return len(delta), delta


def is_edge(u: Vertex, v: Vertex) -> bool:
    _same_dim(u, v)
    return (u.bits ^ v.bits).bit_count() == 1


def rho_vertex(v: Vertex, i: int, k: int) -> Vertex:
    """Delete coordinate ``i`` of ``v``, which must equal ``k``."""
    if v.n < 2:
        raise DimensionError("cannot project below dimension 1")
    if not 0 <= i < v.n:
        raise IndexError(i)
    return Vertex(v.n - 1, rho_bits(v.bits, i, k))


def iota_vertex(v: Vertex, i: int, k: int) -> Vertex:
    """Insert bit ``k`` at coordinate ``i``; the result has dimension ``n + 1``."""
    if not 0 <= i <= v.n:
        raise IndexError(i)
    if k not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {k}")
    check_dimension(v.n + 1)
    return Vertex(v.n + 1, iota_bits(v.bits, i, k))
