"""Finite topological spaces, exhaustive checks and counterexample search."""

from .core import FiniteSpace, SpaceMap, product, subspace, sum_spaces
from .kernels import BACKEND
from .pointset import PointSet
from .setclasses import classify
from .spaceprops import evaluate_all
from .tailspace import TailSet

__all__ = [
    "BACKEND",
    "FiniteSpace",
    "PointSet",
    "SpaceMap",
    "TailSet",
    "classify",
    "evaluate_all",
    "product",
    "subspace",
    "sum_spaces",
]
