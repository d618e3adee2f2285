"""Slow, obviously-correct reference implementations used as test oracles.

Nothing here calls the search kernels: homomorphisms are found by trying
every map of the underlying sets, or by closed formulas.
"""

import itertools
import math
from fractions import Fraction


def naive_homs(g, h):
    """Every map |g| -> |h| that respects multiplication (tiny groups only)."""
    n = g.order
    out = []
    for images in itertools.product(range(h.order), repeat=n):
        if images[0] != 0:
            continue
        if all(images[g.table[a][b]] == h.table[images[a]][images[b]] for a in range(n) for b in range(n)):
            out.append(images)
    return out


def conj_classes(maps, h):
    seen = set()
    count = 0
    for m in maps:
        if m in seen:
            continue
        count += 1
        for x in range(h.order):
            seen.add(tuple(h.conjugate(x, v) for v in m))
    return count


def naive_rep(g, h):
    return conj_classes(naive_homs(g, h), h)


def naive_mono(g, h):
    return conj_classes([m for m in naive_homs(g, h) if len(set(m)) == g.order], h)


def element_power(h, x, k):
    y = 0
    for _ in range(k):
        y = h.table[y][x]
    return y


def cyclic_rep(n, h):
    """Hom(C_n, H) up to conjugacy = classes of x with x^n = 1."""
    sols = [x for x in range(h.order) if element_power(h, x, n) == 0]
    return conj_classes([(x,) for x in sols], h)


def abelian_hom_count(a, b):
    """|Hom(A, B)| for invariant-factor lists a, b."""
    return math.prod(math.gcd(x, y) for x in a for y in b)


def naive_normal_subgroups(g):
    """Unions of conjugacy classes closed under multiplication."""
    n = g.order
    classes = []
    seen = set()
    for x in range(n):
        if x in seen:
            continue
        cls = frozenset(g.conjugate(h, x) for h in range(n))
        seen |= cls
        classes.append(cls)
    out = set()
    rest = [c for c in classes if 0 not in c]
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            s = frozenset({0}).union(*combo)
            if len(s) and n % len(s) == 0 and all(g.table[a][b] in s for a in s for b in s):
                out.add(s)
    return out


def classical_mobius(n):
    res, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


def baez_dolan_nilpotent(order):
    """Closed form on a nilpotent BG: sum_p 1/|Syl_p| - (k - 1)."""
    parts = []
    m, p = order, 2
    while m > 1:
        if m % p == 0:
            q = 1
            while m % p == 0:
                m //= p
                q *= p
            parts.append(q)
        p += 1
    if not parts:
        return Fraction(1)
    return sum(Fraction(1, q) for q in parts) - (len(parts) - 1)


def relabel(g, perm):
    """The Cayley table of ``g`` with element x renamed perm[x] (perm[0] == 0)."""
    n = g.order
    inv = [0] * n
    for x, y in enumerate(perm):
        inv[y] = x
    return [[perm[g.table[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
