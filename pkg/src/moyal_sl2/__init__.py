"""Exact Moyal star-product calculus and harmonic analysis for SL(2,R)."""

from .gaussrat import QQi
from .polynomials import Polynomial
from .diffops import DiffOp
from .liealg import BASIS, E, F, FRAME, H, LieElement, bracket, killing

__all__ = [
    "QQi",
    "Polynomial",
    "DiffOp",
    "LieElement",
    "bracket",
    "killing",
    "E",
    "H",
    "F",
    "BASIS",
    "FRAME",
]

__version__ = "0.1.0"
