"""Gray codes with prescribed ends: Hamiltonian paths of Q_n between odd-distance vertices."""
from __future__ import annotations

from ..hypercube import MAX_DIMENSION, check_dimension, iota_bits, rho_bits


class EvenDistanceError(ValueError):
    """No Hamiltonian path joins two vertices at even distance."""


def hamiltonian_path(a: int, b: int, n: int) -> tuple[int, ...]:
    """Hamiltonian path of Q_n from ``a`` to ``b``.

    Splits on the lowest coordinate ``i`` where the ends differ.  The path
    covers the halfcube of ``a`` ending at ``x = a ^ e_j`` (``j`` the lowest
    other coordinate), crosses to ``x ^ e_i`` and covers the other halfcube
    ending at ``b``.  Both halves again have odd-distance ends.
    """
    check_dimension(n, MAX_DIMENSION)
    if (a ^ b).bit_count() % 2 == 0:
        raise EvenDistanceError("ends at even distance have no Hamiltonian path")
    return tuple(_ham(a, b, n))


def _ham(a: int, b: int, n: int) -> list[int]:
    if n == 1:
        return [a, b]
    diff = a ^ b
    i = (diff & -diff).bit_length() - 1
    j = 0 if i != 0 else 1
    ka = a >> i & 1
    x = a ^ (1 << j)
    first = _ham(rho_bits(a, i, ka), rho_bits(x, i, ka), n - 1)
    second = _ham(rho_bits(x ^ (1 << i), i, 1 - ka), rho_bits(b, i, 1 - ka), n - 1)
    return [iota_bits(v, i, ka) for v in first] + [iota_bits(v, i, 1 - ka) for v in second]


def transitions(path) -> list[int]:
    """Coordinate flipped at each step of a path."""
    return [(u ^ v).bit_length() - 1 for u, v in zip(path, path[1:])]
