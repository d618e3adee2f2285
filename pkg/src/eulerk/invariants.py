"""Characteristic functions on space expressions.

Every characteristic function here is additive over pushouts by
construction: it is fixed by a value on the point and a value on each
classifying-space leaf, and extended by ``f(b ∪_a c) = f(b) + f(c) - f(a)``.
What differs is how leaf values are obtained:

* ``chi_K`` counts homomorphisms K -> G up to conjugacy;
* ``delta0(K)`` is a Möbius combination of the ``chi_{K/N}``, which
  vanishes on every BH with |H| <= |K|, H not isomorphic to K;
* a combination of ``delta0`` terms solved from prescribed basis values
  reproduces any function on p-finite classifying spaces;
* the assembled function glues one such p-local function per prime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ._cache import KeyedCache
from .basis import BAEZ_DOLAN, BasisElement, BasisFunction, basis_element
from .errors import EulerKError, OrderingError
from .groups import FiniteGroup, canonical_key, cyclic, rep_count
from .posets import mobius, quotient_poset
from .spaces import POINT, BG, SpaceExpr, evaluate, leaves, map_leaves, torsion_support
from .spaces.k0 import nilpotent_sylows

TRIVIAL = cyclic(1)


def homotopy_cardinality(orders: Sequence[int]) -> Fraction:
    """|pi_2||pi_4|... / |pi_1||pi_3|... for a connected space.

    ``orders[0]`` is |pi_1|, ``orders[1]`` is |pi_2|, and so on.
    """
    if any(int(o) < 1 for o in orders):
        raise ValueError("homotopy group orders must be >= 1")
    num = math.prod(int(o) for o in orders[1::2])
    den = math.prod(int(o) for o in orders[0::2])
    return Fraction(num, den)


class Characteristic:
    """Base for additive invariants; subclasses supply point and leaf values."""

    strategy = "direct-structural"
    name = "characteristic"

    def point_value(self) -> Fraction:
        raise NotImplementedError

    def leaf_value(self, g: FiniteGroup) -> Fraction:
        raise NotImplementedError

    def __call__(self, x: SpaceExpr) -> Fraction:
        return evaluate(x, self.point_value(), self.leaf_value)

    def per_prime(self, x: SpaceExpr) -> dict[int, Fraction]:
        return {}


class Structural(Characteristic):
    def __init__(self, name, point, leaf: Callable[[FiniteGroup], object]):
        self.name = name
        self._point = Fraction(point)
        self._leaf = leaf

    def point_value(self):
        return self._point

    def leaf_value(self, g):
        return Fraction(self._leaf(g))


def rational_euler(x: SpaceExpr) -> Fraction:
    """Rational Euler characteristic: every classifying-space leaf counts 1."""
    return evaluate(x, 1, lambda g: 1)


RATIONAL_EULER = Structural("euler-rational", 1, lambda g: 1)


class ChiK(Characteristic):
    """``X -> |pi_0 Map(BK, X)|`` extended additively."""

    def __init__(self, k: FiniteGroup):
        self.k = k
        self.name = f"chi-K={k.name}"

    def point_value(self):
        return Fraction(1)

    def leaf_value(self, g):
        return Fraction(rep_count(self.k, g))


def chi_K(k: FiniteGroup, x: SpaceExpr) -> Fraction:
    return ChiK(k)(x)


_expansions = KeyedCache()


def delta0_expansion(k: FiniteGroup) -> list[tuple[int, FiniteGroup]]:
    """``delta0_K = sum_N mu(top, N) chi_{K/N}`` as (mu, K/N) pairs.

    The general construction runs a downward induction over Postnikov
    levels i = n, ..., 0 with one Möbius step per level. For aspherical K
    (n = 1) the levels above 1 are plain ``chi`` functions and level 0 has a
    single node, so only the step at level 1 does any work.
    """
    key = canonical_key(k)
    return _expansions.get(key, lambda: _expand(k))


def _expand(k):
    # level 1: one Möbius step over the poset of 1-surjections out of BK,
    # each node contributing delta^2 = chi of its target group
    poset = quotient_poset(k)
    mu = mobius(poset)
    merged: dict[tuple, list] = {}
    for s in poset.below[poset.top]:
        coef = mu(poset.top, s)
        if coef == 0:
            continue
        q = poset.target(s)
        ck = canonical_key(q)
        if ck in merged:
            merged[ck][0] += coef
        else:
            merged[ck] = [coef, q]
    # level 0: K is connected, so P^0_K is the single node K with mu = 1
    return [(c, q) for c, q in merged.values() if c]


@dataclass(frozen=True)
class CharFunction(Characteristic):
    """``sum_i c_i * delta0_{K_i}`` with exact rational coefficients."""

    terms: tuple[tuple[Fraction, FiniteGroup], ...]
    strategy: str = "delta-combination"
    name: str = "delta-combination"

    def chi_terms(self) -> list[tuple[Fraction, FiniteGroup]]:
        """The same function written as ``sum_j a_j * chi_{Q_j}``."""
        return list(self._chi)

    @cached_property
    def _chi(self):
        merged: dict[tuple, list] = {}
        for c, k in self.terms:
            for mu, q in delta0_expansion(k):
                ck = canonical_key(q)
                if ck in merged:
                    merged[ck][0] += c * mu
                else:
                    merged[ck] = [Fraction(c) * mu, q]
        return tuple((c, q) for c, q in merged.values() if c)

    def point_value(self):
        # chi_Q(point) = 1 for every Q
        return sum((c for c, _ in self._chi), Fraction(0))

    def leaf_value(self, g):
        return sum((c * rep_count(q, g) for c, q in self._chi), Fraction(0))

    def __call__(self, x):
        return evaluate(x, self.point_value(), self.leaf_value)


def delta0(k: FiniteGroup) -> CharFunction:
    """Indicator-like function counting injective maps out of BK up to conjugacy."""
    return CharFunction(((Fraction(1), k),), name=f"delta0[{k.name}]")


def _element_group(e: BasisElement) -> FiniteGroup:
    return TRIVIAL if e.is_star else e.group


def _leaf_expr(e: BasisElement) -> SpaceExpr:
    return POINT if e.is_star else BG(e.group)


def solve_basis_coefficients(f) -> list[tuple[BasisElement, Fraction]]:
    """Coefficients c_i with ``sum c_i delta0_{K_i}`` matching ``f`` on each K_i.

    ``f`` is a :class:`BasisFunction` or a sequence of (element, value)
    pairs already in the total order. Solved by forward substitution, since
    ``delta0_{K_i}(K_j) = 0`` whenever K_i comes after K_j.
    """
    if isinstance(f, BasisFunction):
        entries = f.entries
    else:
        entries = [(e, Fraction(v)) for e, v in f]
        keys = [e.sort_key for e, _ in entries]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise OrderingError("basis elements must be listed [*] first, then by order and key")
    coefs: list[tuple[BasisElement, Fraction]] = []
    deltas = [delta0(_element_group(e)) for e, _ in entries]
    for n, (elem, value) in enumerate(entries):
        leaf = _leaf_expr(elem)
        diag = deltas[n](leaf)
        if diag.denominator != 1 or diag <= 0:
            raise EulerKError(f"delta0 of {elem} on itself is {diag}, expected a positive integer")
        acc = value - sum((c * deltas[i](leaf) for i, (_, c) in enumerate(coefs)), Fraction(0))
        coefs.append((elem, acc / diag))
    return coefs


def combination(coefs: Iterable[tuple[BasisElement, Fraction]], name="solved") -> CharFunction:
    terms = tuple((Fraction(c), _element_group(e)) for e, c in coefs if c)
    return CharFunction(terms, name=name)


def extend(f: BasisFunction) -> CharFunction:
    """The characteristic function agreeing with ``f`` on its listed elements."""
    return combination(solve_basis_coefficients(f), name=f.name)


def _sylow_or_point(p: int):
    def replace(g: FiniteGroup) -> SpaceExpr:
        if g.order % p:
            return POINT
        return BG(nilpotent_sylows(g)[p])

    return replace


def project_prime(f: Characteristic, p: int, x: SpaceExpr) -> Fraction:
    """Evaluate ``f`` after replacing each BG leaf by its p-completion.

    For nilpotent G the p-completion of BG is B(Syl_p G), a point when p does
    not divide |G|.
    """
    return f(map_leaves(x, _sylow_or_point(p)))


class NilpotentLeafRule(Characteristic):
    """Structural evaluation with BG -> sum_p f(B Syl_p G) - (k-1) f(*)."""

    def __init__(self, f: BasisFunction):
        self.f = f
        self.name = f.name

    def point_value(self):
        return self.f.point_value

    def leaf_value(self, g):
        sylows = nilpotent_sylows(g)
        e = self.f.point_value
        return sum((self.f.value(basis_element(s)) for s in sylows.values()), Fraction(0)) - (len(sylows) - 1) * e


def evaluate_structural(f: BasisFunction, x: SpaceExpr) -> Fraction:
    return NilpotentLeafRule(f)(x)


def _prime_local(f: BasisFunction, p: int, x: SpaceExpr) -> CharFunction:
    needed = set()
    for g in leaves(x):
        if g.order % p == 0:
            needed.add(basis_element(nilpotent_sylows(g)[p]))
    return extend(f.restricted(needed))


def assemble(f: BasisFunction, x: SpaceExpr) -> tuple[Fraction, dict[int, Fraction]]:
    """``e chi_Q(X) + sum_p (f_p(X) - e chi_Q(X))`` and the per-prime f_p(X).

    Only primes in the torsion support of X contribute; for any other prime
    f_p(X) = e chi_Q(X) and its term vanishes.
    """
    for g in leaves(x):
        nilpotent_sylows(g)
    e = f.point_value
    base = e * rational_euler(x)
    total = base
    per_prime = {}
    for p in sorted(torsion_support(x)):
        fp = _prime_local(f, p, x)
        v = project_prime(fp, p, x)
        per_prime[p] = v
        total += v - base
    return total, per_prime


def evaluate_assembled(f: BasisFunction, x: SpaceExpr) -> Fraction:
    return assemble(f, x)[0]


class Assembled(Characteristic):
    """Extension of a basis function to all expressions, prime by prime."""

    strategy = "assembly"

    def __init__(self, f: BasisFunction):
        self.f = f
        self.name = f.name
        self._rule = NilpotentLeafRule(f)

    def point_value(self):
        return self.f.point_value

    def leaf_value(self, g):
        return self._rule.leaf_value(g)

    def __call__(self, x):
        return evaluate_assembled(self.f, x)

    def per_prime(self, x):
        return assemble(self.f, x)[1]


def baez_dolan() -> Assembled:
    return Assembled(BAEZ_DOLAN)
