"""Canonical isomorphism keys and display names.

Keys are ``(order, kind, data)`` tuples, a complete isomorphism invariant:

* abelian groups: ``kind == 0`` and ``data`` is the invariant-factor list;
* otherwise ``kind == 1`` and ``data`` is the lexicographically least
  row-major Cayley table among the relabelings induced by irredundant
  generating tuples of minimal length whose element-order sequence is
  lexicographically greatest. That candidate set is defined
  group-theoretically, so equal tables mean isomorphic groups.

Abelian groups skip the table search because their automorphism groups make
every candidate tuple tie (C2^5 alone has ~10^7 of them).
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from functools import lru_cache

import numpy as np

from . import _backend
from .core import FiniteGroup


def _order_types(orders, k):
    """Non-increasing length-k sequences over ``orders`` in descending lex order."""
    values = sorted(set(orders), reverse=True)
    return itertools.combinations_with_replacement(values, k)


def _least_table(g: FiniteGroup):
    n = g.order
    if n == 1:
        return (0,)
    eo = g.element_orders
    by_order: dict[int, list[int]] = {}
    for x in range(1, n):
        by_order.setdefault(eo[x], []).append(x)
    available = [o for o in by_order]
    for k in range(1, n):
        for otype in _order_types(available, k):
            need = Counter(otype)
            if any(len(by_order[o]) < c for o, c in need.items()):
                continue
            lists = [by_order[o] for o in otype]
            width = max(len(c) for c in lists)
            cand = np.zeros((k, width), dtype=np.int32)
            for j, c in enumerate(lists):
                cand[j, : len(c)] = c
            counts = np.array([len(c) for c in lists], dtype=np.int32)
            best = _backend.kernels.canonical_table(g.array, cand, counts)
            if best is not None:
                return tuple(int(v) for v in best)
    raise AssertionError("unreachable: the whole group generates itself")


@lru_cache(maxsize=4096)
def _key_by_table(table):
    g = FiniteGroup(table, "G")
    if g.is_abelian:
        return (g.order, 0, tuple(invariant_factors(g)))
    return (g.order, 1, _least_table(g))


def canonical_key(g: FiniteGroup):
    """Complete isomorphism invariant, totally ordered within each order."""
    return _key_by_table(g.table)


def invariant_factors(g: FiniteGroup) -> list[int]:
    """Invariant factors d1 >= d2 >= ... of an abelian group (d_{i+1} | d_i)."""
    from .subgroups import prime_factors

    n = g.order
    eo = g.element_orders
    factors: list[list[int]] = []
    for p in prime_factors(n):
        # elementary divisors of the p-part from counts of elements killed by p^j
        killed = []
        j = 0
        while True:
            c = sum(1 for o in eo if (p ** j) % o == 0)
            killed.append(c)
            if j > 0 and c == killed[-2]:
                break
            j += 1
        # rank of p^j-torsion layers: log_p(killed[j] / killed[j-1])
        ranks = []
        for j in range(1, len(killed)):
            r, q = 0, killed[j] // killed[j - 1]
            while q > 1:
                q //= p
                r += 1
            ranks.append(r)
        divisors = []
        for j, r in enumerate(ranks):
            nxt = ranks[j + 1] if j + 1 < len(ranks) else 0
            divisors += [p ** (j + 1)] * (r - nxt)
        factors.append(sorted(divisors, reverse=True))
    width = max((len(f) for f in factors), default=0)
    inv = []
    for i in range(width):
        v = 1
        for f in factors:
            if i < len(f):
                v *= f[i]
        inv.append(v)
    return inv


def _abelian_name(g: FiniteGroup) -> str:
    inv = invariant_factors(g)
    return "x".join(f"C{v}" for v in inv) if inv else "C1"


def _nonabelian_candidates(n):
    from .catalog import catalog_specs

    specs = [s for s in catalog_specs(n) if s[0] in "DQS" and _spec_order(s) == n]
    return sorted(specs, key=lambda s: (s.count("x"), s[0] == "D", s))


def _spec_order(spec):
    from .catalog import _tokenize

    return math.prod(f[1] for f in _tokenize(spec))


@lru_cache(maxsize=1024)
def _name_by_table(table):
    from .catalog import build_catalog_group
    from ..config import limits

    g = FiniteGroup(table, "G")
    if g.is_abelian:
        return _abelian_name(g)
    key = canonical_key(g)
    with limits(max_order=max(g.order, 1)):
        for spec in _nonabelian_candidates(g.order):
            h = build_catalog_group(spec)
            if h.order_profile == g.order_profile and canonical_key(h) == key:
                return spec
    return "table:" + json.dumps(list(key[2]), separators=(",", ":"))


def canonical_name(g: FiniteGroup) -> str:
    """A parseable spec naming the isomorphism class of ``g``.

    Abelian groups get invariant-factor names, non-abelian groups the first
    matching catalog spec, anything else its canonical table literal.
    """
    return _name_by_table(g.table)
