"""Disjoint path covers of hypercubes with prescribed end pairs."""
from .hypercube import Vertex, distance_delta, iota_vertex, parity, rho_vertex
from .pairset import Pair, PairSet, classify, validate_pairset

__version__ = "0.1.0"

__all__ = [
    "Vertex",
    "Pair",
    "PairSet",
    "classify",
    "distance_delta",
    "iota_vertex",
    "parity",
    "rho_vertex",
    "validate_pairset",
]
