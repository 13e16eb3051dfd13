"""Ulam-Warburton cellular automaton on square and hexagonal grids."""

from .engine import AutomatonState, BirthRecord, new_automaton, population, run, step, step_naive
from .lattice import LatticeKind

__all__ = [
    "AutomatonState",
    "BirthRecord",
    "LatticeKind",
    "new_automaton",
    "population",
    "run",
    "step",
    "step_naive",
]
__version__ = "0.1.0"
