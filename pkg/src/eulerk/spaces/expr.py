"""Expression trees for spaces of rational characteristic.

``Pushout(a, b, c)`` is the homotopy pushout ``b ∪_a c``. Nodes record only
the three spaces, never the two maps out of ``a``: every characteristic
function and every K0 class is additive over pushout squares, so the maps
cannot affect anything computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, TypeVar, Union

from ..groups import FiniteGroup

T = TypeVar("T")


@dataclass(frozen=True)
class Empty:
    def __str__(self):
        return "empty"


@dataclass(frozen=True)
class Point:
    def __str__(self):
        return "point"


@dataclass(frozen=True)
class BG:
    group: FiniteGroup

    def __str__(self):
        return f"B({self.group.name})"


@dataclass(frozen=True)
class Pushout:
    a: "SpaceExpr"
    b: "SpaceExpr"
    c: "SpaceExpr"

    def __str__(self):
        return f"pushout({self.a}; {self.b}; {self.c})"


@dataclass(frozen=True)
class Disjoint:
    children: tuple["SpaceExpr", ...]

    def __str__(self):
        return "disjoint(" + ", ".join(map(str, self.children)) + ")"


@dataclass(frozen=True)
class Susp:
    x: "SpaceExpr"

    def __str__(self):
        return f"susp({self.x})"


@dataclass(frozen=True)
class Wedge:
    x: "SpaceExpr"
    y: "SpaceExpr"

    def __str__(self):
        return f"wedge({self.x}, {self.y})"


SpaceExpr = Union[Empty, Point, BG, Pushout, Disjoint, Susp, Wedge]

EMPTY = Empty()
POINT = Point()


def desugar(x: SpaceExpr) -> SpaceExpr:
    """Rewrite sugar so only Empty, Point, BG and Pushout remain."""
    if isinstance(x, (Empty, Point, BG)):
        return x
    if isinstance(x, Pushout):
        return Pushout(desugar(x.a), desugar(x.b), desugar(x.c))
    if isinstance(x, Susp):
        return Pushout(desugar(x.x), POINT, POINT)
    if isinstance(x, Wedge):
        return Pushout(POINT, desugar(x.x), desugar(x.y))
    if isinstance(x, Disjoint):
        kids = [desugar(c) for c in x.children]
        acc = kids[0]
        for k in kids[1:]:
            acc = Pushout(EMPTY, acc, k)
        return acc
    raise TypeError(f"not a space expression: {x!r}")


def fold(
    x: SpaceExpr,
    *,
    empty: T,
    point: T,
    leaf: Callable[[FiniteGroup], T],
    pushout: Callable[[T, T, T], T],
) -> T:
    """Structural recursion over the desugared tree."""

    def go(e):
        if isinstance(e, Empty):
            return empty
        if isinstance(e, Point):
            return point
        if isinstance(e, BG):
            return leaf(e.group)
        if isinstance(e, Pushout):
            return pushout(go(e.a), go(e.b), go(e.c))
        raise TypeError(f"unexpected node {e!r}")

    return go(desugar(x))


def evaluate(x: SpaceExpr, point_value, leaf_value: Callable[[FiniteGroup], Fraction]) -> Fraction:
    """Extend leaf values additively: f(b ∪_a c) = f(b) + f(c) - f(a)."""
    cache: dict[FiniteGroup, Fraction] = {}

    def leaf(g):
        if g not in cache:
            cache[g] = Fraction(leaf_value(g))
        return cache[g]

    return fold(
        x,
        empty=Fraction(0),
        point=Fraction(point_value),
        leaf=leaf,
        pushout=lambda a, b, c: b + c - a,
    )


def leaves(x: SpaceExpr) -> list[FiniteGroup]:
    """Distinct leaf groups in first-appearance order."""
    out: dict[FiniteGroup, None] = {}

    def walk(e):
        if isinstance(e, BG):
            out.setdefault(e.group)
        elif isinstance(e, Pushout):
            walk(e.a), walk(e.b), walk(e.c)
        elif isinstance(e, Disjoint):
            for c in e.children:
                walk(c)
        elif isinstance(e, Susp):
            walk(e.x)
        elif isinstance(e, Wedge):
            walk(e.x), walk(e.y)

    walk(x)
    return list(out)


def map_leaves(x: SpaceExpr, fn: Callable[[FiniteGroup], SpaceExpr]) -> SpaceExpr:
    """Replace every ``BG`` leaf by ``fn(G)`` in the desugared tree."""
    return fold(x, empty=EMPTY, point=POINT, leaf=fn, pushout=Pushout)


def sphere(n: int) -> SpaceExpr:
    """The n-fold suspension of S^0 (two points)."""
    x: SpaceExpr = Disjoint((POINT, POINT))
    for _ in range(n):
        x = Susp(x)
    return x


def depth(x: SpaceExpr) -> int:
    if isinstance(x, Pushout):
        return 1 + max(depth(x.a), depth(x.b), depth(x.c))
    if isinstance(x, Disjoint):
        return 1 + max(depth(c) for c in x.children)
    if isinstance(x, Susp):
        return 1 + depth(x.x)
    if isinstance(x, Wedge):
        return 1 + max(depth(x.x), depth(x.y))
    return 0
