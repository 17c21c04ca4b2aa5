"""Constructive connectors for the small-dimension catalogue."""
from .common import ConstructionError
from .gray import hamiltonian_path
from .ops import apply_merge_to_connector, lift_connectors
from .solver import construct, in_catalogue, solve, solve_auto
from .trace import Trace, realize, replay

__all__ = [
    "ConstructionError",
    "Trace",
    "apply_merge_to_connector",
    "construct",
    "hamiltonian_path",
    "in_catalogue",
    "lift_connectors",
    "realize",
    "replay",
    "solve",
    "solve_auto",
]
