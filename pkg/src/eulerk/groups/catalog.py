"""Group-spec grammar and the named catalog.

Grammar::

    spec    := factor { "x" factor }        (left-associative direct product)
    factor  := "C" n | "D" n | "Q8" | "S" n | "table:" "[" ints "]"

``D<n>`` is dihedral of order 2n, ``S<n>`` symmetric on n <= 4 letters.
A table literal is a row-major Cayley table, either flat or nested.
"""

from __future__ import annotations

import itertools
import json
import math
import re
from functools import lru_cache

from ..config import get_limits
from ..errors import GroupSpecError, LimitError
from .core import FiniteGroup

_FACTOR = re.compile(r"(C|D|S)(\d+)|(Q8)|table:")


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup.from_table(
        [[(a + b) % n for b in range(n)] for a in range(n)], f"C{n}", check=False
    )


def dihedral(n: int) -> FiniteGroup:
    # r^i s^j  <->  i + n*j ;  s r = r^-1 s
    def mul(x, y):
        i, j = x % n, x // n
        k, l = y % n, y // n
        if j == 0:
            return (i + k) % n + n * l
        return (i - k) % n + n * ((1 + l) % 2)

    size = 2 * n
    return FiniteGroup.from_table(
        [[mul(a, b) for b in range(size)] for a in range(size)], f"D{n}", check=False
    )


def quaternion() -> FiniteGroup:
    # basis units 1, i, j, k with signs; index = unit + 4*(sign is negative)
    units = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }

    def mul(x, y):
        u, sx = x % 4, -1 if x >= 4 else 1
        v, sy = y % 4, -1 if y >= 4 else 1
        w, s = units[(u, v)]
        return w + (4 if s * sx * sy < 0 else 0)

    return FiniteGroup.from_table([[mul(a, b) for b in range(8)] for a in range(8)], "Q8", check=False)


def symmetric(n: int) -> FiniteGroup:
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (a*b)(x) = a(b(x))
    rows = [[index[tuple(a[b[x]] for x in range(n))] for b in perms] for a in perms]
    return FiniteGroup.from_table(rows, f"S{n}", check=False)


def direct_product(g: FiniteGroup, h: FiniteGroup, name=None) -> FiniteGroup:
    m = h.order
    gt, ht = g.table, h.table
    size = g.order * m
    rows = [
        [gt[a // m][b // m] * m + ht[a % m][b % m] for b in range(size)]
        for a in range(size)
    ]
    return FiniteGroup.from_table(rows, name or f"{g.name}x{h.name}", check=False)


def _factor_order(kind, n):
    if kind == "C":
        return n
    if kind == "D":
        return 2 * n
    return math.factorial(n)


def _parse_table_literal(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroupSpecError(f"malformed table literal: {exc.msg}") from None
    if not isinstance(data, list):
        raise GroupSpecError("table literal must be a list")
    if data and all(isinstance(r, list) for r in data):
        flat = [x for r in data for x in r]
    else:
        flat = data
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in flat):
        raise GroupSpecError("table entries must be integers")
    n = math.isqrt(len(flat))
    if n * n != len(flat) or n == 0:
        raise GroupSpecError(f"table literal has {len(flat)} entries, not a nonzero square")
    return n, [flat[i * n:(i + 1) * n] for i in range(n)]


def _tokenize(spec):
    """Split a spec into factor descriptors, checking syntax only."""
    s = "".join(spec.split())
    if not s:
        raise GroupSpecError("empty group spec")
    factors = []
    pos = 0
    while True:
        m = _FACTOR.match(s, pos)
        if not m:
            raise GroupSpecError(f"bad group spec {spec!r} at offset {pos}")
        if m.group(0) == "table:":
            if pos + 6 >= len(s) or s[pos + 6] != "[":
                raise GroupSpecError("table literal must start with '['")
            depth, end = 0, pos + 6
            while end < len(s):
                if s[end] == "[":
                    depth += 1
                elif s[end] == "]":
                    depth -= 1
                    if depth == 0:
                        break
                end += 1
            if depth != 0:
                raise GroupSpecError("unterminated table literal")
            n, rows = _parse_table_literal(s[pos + 6:end + 1])
            factors.append(("table", n, rows))
            pos = end + 1
        elif m.group(3):
            factors.append(("Q", 8, None))
            pos = m.end()
        else:
            kind, n = m.group(1), int(m.group(2))
            if n < 1:
                raise GroupSpecError(f"{kind}{n}: index must be >= 1")
            if kind == "S" and n > 4:
                raise GroupSpecError(f"S{n}: symmetric groups are limited to n <= 4")
            factors.append((kind, _factor_order(kind, n), n))
            pos = m.end()
        if pos == len(s):
            return factors
        if s[pos] != "x":
            raise GroupSpecError(f"expected 'x' at offset {pos} in {spec!r}")
        pos += 1


def _build_factor(kind, n, payload):
    if kind == "C":
        return cyclic(payload)
    if kind == "D":
        return dihedral(payload)
    if kind == "S":
        return symmetric(payload)
    if kind == "Q":
        return quaternion()
    rows = payload
    name = "table:" + json.dumps([x for r in rows for x in r], separators=(",", ":"))
    return FiniteGroup.from_table(rows, name)


@lru_cache(maxsize=512)
def _build(canonical_spec):
    factors = _tokenize(canonical_spec)
    group = None
    for kind, n, payload in factors:
        f = _build_factor(kind, n, payload)
        group = f if group is None else direct_product(group, f)
    return FiniteGroup(group.table, canonical_spec)


def build_catalog_group(spec: str, max_order: int | None = None) -> FiniteGroup:
    """Build the group named by ``spec``; deterministic for equal specs."""
    if not isinstance(spec, str):
        raise GroupSpecError("group spec must be a string")
    factors = _tokenize(spec)
    cap = get_limits().max_order if max_order is None else max_order
    order = math.prod(f[1] for f in factors)
    if order > cap:
        raise LimitError(f"group {spec!r} has order {order} > max order {cap}")
    return _build("".join(spec.split()))


def catalog_specs(max_order: int = 16) -> list[str]:
    """Catalog groups of order <= ``max_order``, one spec per catalog entry.

    Direct products are listed with non-increasing cyclic factors, plus the
    non-abelian building blocks times cyclic groups. Isomorphic duplicates
    (``C2xC3`` vs ``C6``) are intentionally kept.
    """
    specs: list[str] = []
    seen = set()

    def add(s, order):
        if order <= max_order and s not in seen:
            seen.add(s)
            specs.append(s)

    for n in range(1, max_order + 1):
        add(f"C{n}", n)
    for n in range(2, max_order // 2 + 1):
        add(f"D{n}", 2 * n)
    add("Q8", 8)
    add("S3", 6)
    add("S4", 24)

    def cyclic_chains(limit, largest):
        # non-increasing sequences of cyclic orders >= 2 with product <= limit
        for k in range(min(largest, limit), 1, -1):
            yield (k,)
            for rest in cyclic_chains(limit // k, k):
                yield (k,) + rest

    for chain in cyclic_chains(max_order, max_order):
        if len(chain) > 1:
            add("x".join(f"C{k}" for k in chain), math.prod(chain))
    bases = [("Q8", 8), ("S3", 6), ("S4", 24)] + [(f"D{k}", 2 * k) for k in range(3, max_order // 4 + 1)]
    for base, bo in bases:
        for chain in cyclic_chains(max_order // bo, max_order):
            add(base + "".join(f"xC{k}" for k in chain), bo * math.prod(chain))
    return specs
