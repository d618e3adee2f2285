"""Posets of 1-surjections out of BG and their Möbius functions.

A 1-surjection ``BG -> BT`` is a surjective homomorphism up to equivalence,
so it is determined by its kernel. Nodes are normal subgroups of G; node T
lies above node S when ker(T) is contained in ker(S). The top node is the
trivial kernel (the identity of BG), the bottom node is G itself (the map to
a point).

Node identity is the kernel alone. Several homotopy classes of maps
``T -> S`` may realize ``T >= S``; they never produce extra nodes here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .groups import FiniteGroup, NormalSubgroup, normal_subgroups, quotient


@dataclass(frozen=True, eq=False)
class QuotientPoset:
    base: FiniteGroup
    nodes: tuple[NormalSubgroup, ...]

    @property
    def top(self) -> int:
        return 0

    @property
    def bottom(self) -> int:
        return len(self.nodes) - 1

    def __len__(self):
        return len(self.nodes)

    def leq(self, s: int, t: int) -> bool:
        """``S <= T``: the kernel of T sits inside the kernel of S."""
        return self.nodes[t].elementset <= self.nodes[s].elementset

    @cached_property
    def below(self) -> tuple[tuple[int, ...], ...]:
        """``below[t]`` lists every S <= T in node order."""
        n = len(self.nodes)
        return tuple(tuple(s for s in range(n) if self.leq(s, t)) for t in range(n))

    def target(self, i: int) -> FiniteGroup:
        """The quotient group a node's 1-surjection lands in."""
        return quotient(self.base, self.nodes[i])

    def kernels(self) -> list[list[int]]:
        return [list(n.elements) for n in self.nodes]


@dataclass(frozen=True, eq=False)
class MobiusData:
    poset: QuotientPoset
    mu: tuple[tuple[int, ...], ...]  # mu[t][s]; zero unless s <= t

    def __call__(self, t: int, s: int) -> int:
        return self.mu[t][s]


@lru_cache(maxsize=512)
def _poset(g: FiniteGroup) -> QuotientPoset:
    nodes = sorted(normal_subgroups(g), key=lambda n: (n.order, n.elements))
    return QuotientPoset(g, tuple(nodes))


def quotient_poset(g: FiniteGroup) -> QuotientPoset:
    """Normal subgroups of ``g`` as the poset of 1-surjections out of BG."""
    return _poset(g)


def restriction_multiplicity(poset: QuotientPoset, t: int, s: int) -> int:
    """Number of nodes of P_T that restrict to node S of P_G.

    Counted directly: normal subgroups of ``G / ker T`` whose preimage in G
    equals ``ker S``.
    """
    g = poset.base
    kt = poset.nodes[t]
    ks = poset.nodes[s].elementset
    # coset index of every element of g, matching quotient()'s labelling
    coset_of: dict[int, int] = {}
    reps = []
    for a in range(g.order):
        if a in coset_of:
            continue
        coset_of.update({g.table[a][x]: len(reps) for x in kt.elements})
        reps.append(a)
    qt = quotient(g, kt)
    count = 0
    for m in normal_subgroups(qt):
        preimage = frozenset(a for a in range(g.order) if coset_of[a] in m.elementset)
        if preimage == ks:
            count += 1
    return count


def _assign_all(t, s, mu_bar, representatives):
    return [mu_bar] + [0] * (len(representatives) - 1)


def mobius(poset: QuotientPoset, split=_assign_all) -> MobiusData:
    """Möbius function of the poset, rows indexed by the upper node.

    ``split(t, s, mu_bar, representatives)`` distributes mu_bar(T, S) over the
    elements of P_T restricting to S. In this aspherical model there is
    exactly one such element whenever S <= T, so the default (all weight on it)
    is the only choice and ``mu == mu_bar``.
    """
    n = len(poset.nodes)
    mu = [[0] * n for _ in range(n)]
    for t in range(n):
        below = poset.below[t]
        mu[t][t] = 1
        # nodes below T in list order: every R strictly between S and T
        # has a strictly smaller kernel than S, hence appears earlier
        for s in below:
            if s == t:
                continue
            mu[t][s] = -sum(mu[t][r] for r in below if r != s and poset.leq(s, r))
    for t in range(n):
        for s in poset.below[t]:
            shares = split(t, s, mu[t][s], [s])
            if sum(shares) != mu[t][s]:
                raise ValueError("split must preserve the Möbius value")
            mu[t][s] = shares[0]
    return MobiusData(poset, tuple(tuple(row) for row in mu))


def invert(poset: QuotientPoset, data: MobiusData, f) -> dict[int, Fraction]:
    """Recover g from f(T) = sum_{S <= T} g(S); ``f`` maps node -> value."""
    out = {}
    for t in range(len(poset.nodes)):
        out[t] = sum((data.mu[t][s] * Fraction(f[s]) for s in poset.below[t]), Fraction(0))
    return out


def mobius_report(poset: QuotientPoset, data: MobiusData) -> dict:
    """JSON-ready dump: node kernels and the full mu matrix."""
    return {
        "group": poset.base.name,
        "order": poset.base.order,
        "nodes": [
            {"index": i, "kernel": list(n.elements), "quotient_order": poset.base.order // n.order}
            for i, n in enumerate(poset.nodes)
        ],
        "mu": [list(row) for row in data.mu],
    }
