"""Cayley-table groups, homomorphisms and normal subgroups."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..errors import GroupSpecError, InvalidSubgroupError


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its Cayley table.

    ``table[a][b]`` is the index of ``a*b``; element 0 is the identity.
    Equality and hashing use the table only, never the display name.
    """

    table: tuple[tuple[int, ...], ...]
    name: str = "G"

    @classmethod
    def from_table(cls, rows, name="G", check=True):
        table = tuple(tuple(int(x) for x in row) for row in rows)
        group = cls(table, name)
        if check:
            group.validate()
        return group

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def __len__(self):
        return len(self.table)

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def array(self) -> np.ndarray:
        return np.ascontiguousarray(np.array(self.table, dtype=np.int32).reshape(self.order, self.order))

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for a, row in enumerate(self.table):
            inv[a] = row.index(0)
        return tuple(inv)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.table[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def order_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_orders))

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def conjugate(self, h: int, x: int) -> int:
        """Return h x h^-1."""
        return self.table[self.table[h][x]][self.inverses[h]]

    def closure(self, gens) -> frozenset[int]:
        """Subgroup generated by ``gens``."""
        seen = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                row = self.table[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A deterministic generating set, picked greedily by element order."""
        ranked = sorted(range(1, self.order), key=lambda a: (-self.element_orders[a], a))
        gens: list[int] = []
        span = frozenset([0])
        for a in ranked:
            if len(span) == self.order:
                break
            if a not in span:
                gens.append(a)
                span = self.closure(gens)
        return tuple(gens)

    def validate(self):
        n = len(self.table)
        if n == 0:
            raise GroupSpecError("a group needs at least one element")
        t = self.table
        for row in t:
            if len(row) != n:
                raise GroupSpecError("Cayley table must be square")
            for x in row:
                if not 0 <= x < n:
                    raise GroupSpecError(f"table entry {x} out of range [0, {n})")
        for a in range(n):
            if t[0][a] != a or t[a][0] != a:
                raise GroupSpecError("element 0 must be the identity")
            if 0 not in t[a] or sorted(t[a]) != list(range(n)):
                raise GroupSpecError(f"row {a} is not a permutation (no inverse)")
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = ta[b]
                tb = t[b]
                for c in range(n):
                    if t[tab][c] != ta[tb[c]]:
                        raise GroupSpecError(f"associativity fails at ({a}, {b}, {c})")


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == self.source.order

    @property
    def kernel(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.images) if y == 0)

    def is_valid(self) -> bool:
        s, t, im = self.source.table, self.target.table, self.images
        if im[0] != 0:
            return False
        n = self.source.order
        return all(im[s[a][b]] == t[im[a]][im[b]] for a in range(n) for b in range(n))


@dataclass(frozen=True)
class NormalSubgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elementset

    @cached_property
    def elementset(self) -> frozenset[int]:
        return frozenset(self.elements)

    def validate(self):
        g = self.parent
        s = self.elementset
        if 0 not in s:
            raise InvalidSubgroupError("subgroup must contain the identity")
        if any(not 0 <= x < g.order for x in s):
            raise InvalidSubgroupError("element index out of range")
        for a in s:
            if g.inverses[a] not in s:
                raise InvalidSubgroupError("not closed under inverses")
            for b in s:
                if g.table[a][b] not in s:
                    raise InvalidSubgroupError("not closed under the product")
        for h in range(g.order):
            for x in s:
                if g.conjugate(h, x) not in s:
                    raise InvalidSubgroupError("not stable under conjugation")
