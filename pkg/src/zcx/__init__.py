"""Exact-arithmetic census and verification toolkit for convex polyominoes
classified by NE/NW convexity degree."""

from .core import (
    Cell,
    Disconnected,
    EmptyRow,
    NotConvex,
    Polyomino,
    PolyominoError,
    decode,
    from_rows,
    mirror,
    size,
)
from .classify import DegreePair, CensusRow, census, degree_pair
from .enumerate import all_convex, count_convex
from .gentree import (
    InvalidLabel,
    NotAscending,
    TreeLabel,
    children,
    count_levels,
    label_of,
    parent,
    succ,
)
from .series import Series, gf, h_formula, rect_formula, scalar_gf

__all__ = [
    "Cell",
    "CensusRow",
    "DegreePair",
    "Disconnected",
    "EmptyRow",
    "InvalidLabel",
    "NotAscending",
    "NotConvex",
    "Polyomino",
    "PolyominoError",
    "Series",
    "TreeLabel",
    "all_convex",
    "census",
    "children",
    "count_convex",
    "count_levels",
    "decode",
    "degree_pair",
    "from_rows",
    "gf",
    "h_formula",
    "label_of",
    "mirror",
    "parent",
    "rect_formula",
    "scalar_gf",
    "size",
    "succ",
]

__version__ = "0.1.0"
