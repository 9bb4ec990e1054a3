"""Pushouts of relative graphs and the gauge-invariant ideals of their
Toeplitz-type algebras, decided combinatorially."""

__version__ = "0.1.0"

from .errors import ConsistencyError, InputError, RelGraphError
from .graph import EdgeDecl, EdgeRef, Graph, Lasso, Path
from .ideals import IdealCode
from .pushout import PushoutDiagram, compute_pushout
from .relative import InclusionMorphism, RelativeGraph

__all__ = [
    "ConsistencyError",
    "EdgeDecl",
    "EdgeRef",
    "Graph",
    "IdealCode",
    "InclusionMorphism",
    "InputError",
    "Lasso",
    "Path",
    "PushoutDiagram",
    "RelGraphError",
    "RelativeGraph",
    "compute_pushout",
]
