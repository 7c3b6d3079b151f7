"""Spectral graph theory toolkit for checking conjectured eigenvalue inequalities."""

from .errors import (
    BudgetExceeded,
    EmptyHypergraph,
    InfeasibleSeed,
    InvalidParameters,
    InvalidRotationSystem,
    MalformedInput,
    NonConvergence,
    NotConnected,
    NotPlanar,
    SpectralabError,
)
from .graph import Graph, from_graph6, to_graph6

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "EmptyHypergraph", "Graph", "InfeasibleSeed", "InvalidParameters",
    "InvalidRotationSystem", "MalformedInput", "NonConvergence", "NotConnected", "NotPlanar",
    "SpectralabError", "from_graph6", "to_graph6",
]
