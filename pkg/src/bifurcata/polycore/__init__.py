"""Exact polynomial kernel: types, parsing, resultants, roots, systems."""

from .poly import QQ, BiPoly, RationalField, TriPoly, UniPoly
from .parser import parse_polynomial
from .rational import Q, q

__all__ = [
    "QQ",
    "BiPoly",
    "RationalField",
    "TriPoly",
    "UniPoly",
    "parse_polynomial",
    "Q",
    "q",
]
