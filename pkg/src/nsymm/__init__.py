"""Integral primitives of the Hopf algebra of noncommutative symmetric functions."""

from .ncalgebra import NCPoly, Z
from .primitives import build_P, build_d, index_of_FL, over_curve
from .qsymm import QElem, osh_mul
from .words import enumerate_lyndon, is_lyndon

__all__ = [
    "NCPoly",
    "QElem",
    "Z",
    "build_P",
    "build_d",
    "enumerate_lyndon",
    "index_of_FL",
    "is_lyndon",
    "osh_mul",
    "over_curve",
]
