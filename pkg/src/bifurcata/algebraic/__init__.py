"""Exact real algebraic numbers and simple extension field arithmetic."""

from .numbers import AlgebraicNumber, sort_unique
from .extension import (
    ExtensionElement,
    ExtensionField,
    embed_rational_poly,
    extension_root_to_algebraic,
    isolate_real_roots_extension,
    refine_extension_root,
)
from .joins import field_of, join_algebraic, join_field_with_algebraic
from .signs import sign_at

__all__ = [
    "AlgebraicNumber",
    "ExtensionElement",
    "ExtensionField",
    "embed_rational_poly",
    "extension_root_to_algebraic",
    "isolate_real_roots_extension",
    "refine_extension_root",
    "field_of",
    "join_algebraic",
    "join_field_with_algebraic",
    "sign_at",
    "sort_unique",
]
