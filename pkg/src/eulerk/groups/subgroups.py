"""Subgroup scans, quotients and Sylow structure."""

from __future__ import annotations

from functools import lru_cache

from ..config import get_limits
from ..errors import InvalidSubgroupError, LimitError
from .core import FiniteGroup, NormalSubgroup


def _check_order(g: FiniteGroup):
    cap = get_limits().max_order
    if g.order > cap:
        raise LimitError(f"group {g.name} has order {g.order} > max order {cap}")


@lru_cache(maxsize=256)
def _all_subgroups(g: FiniteGroup) -> tuple[frozenset[int], ...]:
    # every subgroup arises by adjoining one element at a time to a smaller one
    trivial = frozenset([0])
    found = {trivial: ()}
    frontier = [trivial]
    while frontier:
        nxt = []
        for sub in frontier:
            gens = found[sub]
            for a in range(1, g.order):
                if a in sub:
                    continue
                bigger = g.closure(gens + (a,))
                if bigger not in found:
                    found[bigger] = gens + (a,)
                    nxt.append(bigger)
        frontier = nxt
    return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))


def all_subgroups(g: FiniteGroup) -> list[frozenset[int]]:
    """Every subgroup of ``g``, sorted by size then element list."""
    _check_order(g)
    return list(_all_subgroups(g))


def _is_normal(g: FiniteGroup, sub: frozenset[int]) -> bool:
    return all(g.conjugate(h, x) in sub for h in g.generators for x in sub)


def normal_subgroups(g: FiniteGroup) -> list[NormalSubgroup]:
    """All normal subgroups, ordered by size then element list."""
    return [NormalSubgroup(g, tuple(s)) for s in all_subgroups(g) if _is_normal(g, s)]


def subgroup_as_group(g: FiniteGroup, elements, name=None) -> FiniteGroup:
    """Relabel a subgroup's elements 0..k-1 in increasing parent order."""
    elems = sorted(elements)
    index = {x: i for i, x in enumerate(elems)}
    try:
        rows = [[index[g.table[a][b]] for b in elems] for a in elems]
    except KeyError:
        raise InvalidSubgroupError("element set is not closed under the product") from None
    return FiniteGroup.from_table(rows, name or f"{g.name}[{len(elems)}]", check=False)


def quotient(g: FiniteGroup, n: NormalSubgroup, name=None) -> FiniteGroup:
    """Coset-product table of ``g / n``; cosets ordered by least element."""
    if n.parent != g:
        raise InvalidSubgroupError("normal subgroup belongs to a different group")
    n.validate()
    coset_of = {}
    reps = []
    for a in range(g.order):
        if a in coset_of:
            continue
        idx = len(reps)
        reps.append(a)
        for x in n.elements:
            coset_of[g.table[a][x]] = idx
    rows = [[coset_of[g.table[a][b]] for b in reps] for a in reps]
    if name is None:
        name = g.name if n.order == 1 else f"{g.name}/N{n.order}"
    return FiniteGroup.from_table(rows, name, check=False)


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def prime_power_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_prime_power(n: int) -> int | None:
    """The prime if ``n`` is a positive prime power, else None."""
    ps = prime_factors(n)
    return ps[0] if len(ps) == 1 else None


@lru_cache(maxsize=256)
def _sylow(g: FiniteGroup):
    from .canon import canonical_name

    subs = _all_subgroups(g)
    out = {}
    nilpotent = True
    for p in prime_factors(g.order):
        size = prime_power_part(g.order, p)
        matches = [s for s in subs if len(s) == size]
        if len(matches) > 1:
            nilpotent = False
        syl = subgroup_as_group(g, matches[0])
        out[p] = FiniteGroup(syl.table, canonical_name(syl))
    return out, nilpotent


def sylow_decomposition(g: FiniteGroup) -> tuple[dict[int, FiniteGroup], bool]:
    """One Sylow p-subgroup per prime p dividing |g|, and whether g is nilpotent.

    A Sylow subgroup is normal iff it is the unique subgroup of its order, so
    nilpotency is read off the same subgroup scan.
    """
    _check_order(g)
    out, nilpotent = _sylow(g)
    return dict(out), nilpotent
