"""Representation zeta functions of GL_n and GU_n over length-2 rings, n <= 4."""

from __future__ import annotations

from .assembler import assemble, level_zeta, type_rows
from .polyq import Q, RatPoly, ennola_transform
from .typesys import TypeSymbol, class_count, enumerate_types
from .zeta_core import ZetaSeries, special_value

__all__ = [
    "Q",
    "RatPoly",
    "TypeSymbol",
    "ZetaSeries",
    "assemble",
    "class_count",
    "ennola_transform",
    "enumerate_types",
    "level_zeta",
    "special_value",
    "type_rows",
]
