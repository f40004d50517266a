"""Exact Frobenius algebras in finite-dimensional rational vector spaces."""

__version__ = "0.1.0"

from .exact import Fraction, Matrix
from .finvect import Mor, Obj, UNIT
from .frobenius import FrobeniusPackage
from .structures import Algebra, Coalgebra, Pairing
from .zoo import AlgebraSpec, build

__all__ = [
    "UNIT",
    "Algebra",
    "AlgebraSpec",
    "Coalgebra",
    "Fraction",
    "FrobeniusPackage",
    "Matrix",
    "Mor",
    "Obj",
    "Pairing",
    "build",
]
