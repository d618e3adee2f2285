"""Space expressions, their parser, and K0 classes."""

from .expr import (
    BG,
    EMPTY,
    POINT,
    Disjoint,
    Empty,
    Point,
    Pushout,
    SpaceExpr,
    Susp,
    Wedge,
    depth,
    desugar,
    evaluate,
    fold,
    leaves,
    map_leaves,
    sphere,
)
from .k0 import ZERO, K0Class, k0_class, leaf_class, nilpotent_sylows, pair, torsion_support
from .parser import parse, unparse

__all__ = [
    "BG",
    "EMPTY",
    "POINT",
    "ZERO",
    "Disjoint",
    "Empty",
    "K0Class",
    "Point",
    "Pushout",
    "SpaceExpr",
    "Susp",
    "Wedge",
    "depth",
    "desugar",
    "evaluate",
    "fold",
    "k0_class",
    "leaf_class",
    "leaves",
    "map_leaves",
    "nilpotent_sylows",
    "pair",
    "parse",
    "sphere",
    "torsion_support",
    "unparse",
]
