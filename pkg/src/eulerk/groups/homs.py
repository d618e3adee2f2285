"""Homomorphism enumeration, conjugacy-class counts and isomorphism tests."""

from __future__ import annotations

import math

import numpy as np

from .._cache import KeyedCache
from ..config import get_limits
from ..errors import LimitError
from . import _backend
from .core import FiniteGroup, GroupHom


def _check_pair(g: FiniteGroup, h: FiniteGroup):
    lim = get_limits()
    if g.order * h.order > lim.max_hom_pair:
        raise LimitError(
            f"hom search {g.name} -> {h.name} exceeds pair bound "
            f"({g.order}*{h.order} > {lim.max_hom_pair})"
        )


def _candidates(g: FiniteGroup, h: FiniteGroup, exact_order: bool):
    """Candidate images per generator of ``g`` plus the projected search size."""
    lists = []
    for x in g.generators:
        k = g.element_orders[x]
        if exact_order:
            lists.append([y for y, o in enumerate(h.element_orders) if o == k])
        else:
            lists.append([y for y, o in enumerate(h.element_orders) if k % o == 0])
    space = math.prod(len(c) for c in lists)
    width = max((len(c) for c in lists), default=0)
    cand = np.zeros((len(lists), max(width, 1)), dtype=np.int32)
    for j, c in enumerate(lists):
        cand[j, : len(c)] = c
    counts = np.array([len(c) for c in lists], dtype=np.int32)
    return cand, counts, space


def _prepare(g, h, exact):
    _check_pair(g, h)
    cand, counts, space = _candidates(g, h, exact)
    lim = get_limits()
    if space > lim.max_search:
        raise LimitError(f"hom search {g.name} -> {h.name}: {space} candidate tuples > {lim.max_search}")
    return np.array(g.generators, dtype=np.int32), cand, counts


def _search(g, h, mode):
    gens, cand, counts = _prepare(g, h, mode != _backend.MODE_ALL)
    return _backend.kernels.search_homs(g.array, gens, h.array, cand, counts, mode)


def _count(g, h, injective):
    gens, cand, counts = _prepare(g, h, injective)
    inv = np.array(h.inverses, dtype=np.int32)
    return int(_backend.kernels.count_reps(g.array, gens, h.array, inv, cand, counts, injective))


def hom_image_array(g: FiniteGroup, h: FiniteGroup, injective=False) -> np.ndarray:
    """All homomorphisms ``g -> h`` as an (m, |g|) array of image maps."""
    return _search(g, h, _backend.MODE_INJECTIVE if injective else _backend.MODE_ALL)


def enumerate_homs(g: FiniteGroup, h: FiniteGroup) -> list[GroupHom]:
    """Every homomorphism ``g -> h`` exactly once, ordered by generator images."""
    rows = hom_image_array(g, h)
    return [GroupHom(g, h, tuple(int(v) for v in row)) for row in rows]


def _orbits(g, h, rows):
    if len(rows) == 0:
        return 0
    gens = list(g.generators)
    sub = np.ascontiguousarray(rows[:, gens]) if gens else np.zeros((len(rows), 0), dtype=np.int32)
    inv = np.array(h.inverses, dtype=np.int32)
    return int(_backend.kernels.count_conj_orbits(sub, h.array, inv))


_rep_cache = KeyedCache()
_mono_cache = KeyedCache()


def _pair_key(g, h):
    from .canon import canonical_key

    return canonical_key(g), canonical_key(h)


def _abelian_hom_count(g, h):
    from .canon import invariant_factors

    return math.prod(math.gcd(a, b) for a in invariant_factors(g) for b in invariant_factors(h))


def rep_count(g: FiniteGroup, h: FiniteGroup) -> int:
    """Homomorphisms ``g -> h`` up to conjugation in ``h``."""
    if g.order == 1:
        return 1
    _check_pair(g, h)
    if g.is_abelian and h.is_abelian:
        # conjugation is trivial; |Hom(A, B)| = prod gcd over invariant factors
        return _abelian_hom_count(g, h)
    return _rep_cache.get(_pair_key(g, h), lambda: _count(g, h, False))


def mono_rep_count(g: FiniteGroup, h: FiniteGroup) -> int:
    """Injective homomorphisms ``g -> h`` up to conjugation in ``h``."""
    if g.order > h.order or h.order % g.order:
        return 0
    if g.order == 1:
        return 1
    _check_pair(g, h)
    return _mono_cache.get(_pair_key(g, h), lambda: _count(g, h, True))


def find_isomorphism(g: FiniteGroup, h: FiniteGroup) -> GroupHom | None:
    if g.order != h.order or g.order_profile != h.order_profile:
        return None
    if g.order == 1:
        return GroupHom(g, h, (0,))
    rows = _search(g, h, _backend.MODE_FIRST_INJECTIVE)
    if len(rows) == 0:
        return None
    return GroupHom(g, h, tuple(int(v) for v in rows[0]))


def is_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    """Brute-force generator-image search behind an element-order filter."""
    if g is h or g.table == h.table:
        return True
    return find_isomorphism(g, h) is not None


def clear_caches():
    _rep_cache.clear()
    _mono_cache.clear()
