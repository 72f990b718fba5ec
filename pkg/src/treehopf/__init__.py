"""Exact combinatorial Hopf algebras on forests, packed words and endofunctions.

Importing the package registers the six algebras (ck, nck, ho, wqsym, sgsym,
efsym) with the generic checker machinery in :mod:`treehopf.algebra`.
"""

from . import algebra, bases, endo, forests, morphisms, realization, structures, words  # noqa: F401
from .algebra import FreeElement, TensorElement, get_algebra
from .structures import (
    Endofunction,
    OrderedForest,
    PackedWord,
    Permutation,
    PlaneForest,
    RootedForest,
)

__all__ = [
    "FreeElement",
    "TensorElement",
    "get_algebra",
    "OrderedForest",
    "RootedForest",
    "PlaneForest",
    "Endofunction",
    "Permutation",
    "PackedWord",
]

__version__ = "0.1.0"
