"""Basis elements of K0 and functions prescribed on them.

The free basis is ``[*]`` together with ``[BG]`` for each nontrivial p-group
G up to isomorphism. The contractible space appears once, not once per prime.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable

from .errors import EulerKError, MissingValueError, OrderingError
from .groups import FiniteGroup, build_catalog_group, canonical_key, canonical_name, is_prime_power


@dataclass(frozen=True)
class BasisElement:
    """``prime is None`` encodes the point ``[*]``."""

    prime: int | None
    key: tuple = ()
    group: FiniteGroup | None = field(default=None, compare=False, repr=False)

    @property
    def is_star(self) -> bool:
        return self.prime is None

    @property
    def order(self) -> int:
        return 1 if self.prime is None else self.key[0]

    @property
    def sort_key(self):
        return (0,) if self.prime is None else (1, self.key)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    @property
    def spec(self) -> str:
        return "*" if self.prime is None else canonical_name(self.group)

    def __str__(self):
        return "[*]" if self.prime is None else f"[B {self.spec}]"


STAR = BasisElement(None)


def basis_element(g: FiniteGroup) -> BasisElement:
    """The basis element ``[BG]``; the trivial group gives ``[*]``."""
    if g.order == 1:
        return STAR
    p = is_prime_power(g.order)
    if p is None:
        raise EulerKError(f"{g.name} (order {g.order}) is not a p-group")
    return BasisElement(p, canonical_key(g), FiniteGroup(g.table, canonical_name(g)))


def parse_basis(spec: str) -> BasisElement:
    spec = spec.strip()
    if spec in ("*", "point"):
        return STAR
    return basis_element(build_catalog_group(spec))


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("floats are not exact; pass a string like '1/3'")
    return Fraction(v)


class BasisFunction:
    """A function on basis elements with exact rational values.

    Explicit ``entries`` are kept sorted in the total order used by the
    coefficient solver (``[*]`` first, then by group order, then canonical
    key). An optional ``rule`` supplies values for elements not listed.
    """

    def __init__(self, entries: Iterable[tuple[BasisElement, object]] = (), rule: Callable | None = None, name="custom"):
        table: dict[BasisElement, Fraction] = {}
        for elem, value in entries:
            if elem in table:
                raise ValueError(f"duplicate basis element {elem}")
            table[elem] = _as_fraction(value)
        self._table = table
        self.rule = rule
        self.name = name

    @property
    def entries(self) -> list[tuple[BasisElement, Fraction]]:
        return sorted(self._table.items(), key=lambda kv: kv[0].sort_key)

    def has(self, elem: BasisElement) -> bool:
        return elem in self._table or self.rule is not None

    def value(self, elem: BasisElement) -> Fraction:
        if elem in self._table:
            return self._table[elem]
        if self.rule is not None:
            return _as_fraction(self.rule(elem))
        raise MissingValueError(f"{self.name}: no value for {elem}")

    def __call__(self, elem: BasisElement) -> Fraction:
        return self.value(elem)

    @property
    def point_value(self) -> Fraction:
        return self.value(STAR)

    def restricted(self, elems: Iterable[BasisElement]) -> "BasisFunction":
        """An explicit function on ``elems`` (plus ``[*]``) with our values."""
        wanted = set(elems) | {STAR}
        return BasisFunction(((e, self.value(e)) for e in wanted), name=self.name)

    @classmethod
    def ordered(cls, entries, name="custom") -> "BasisFunction":
        """Like the constructor, but reject input not already in total order."""
        entries = list(entries)
        keys = [e.sort_key for e, _ in entries]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise OrderingError("basis elements must be listed [*] first, then by order and key")
        return cls(entries, name=name)

    @classmethod
    def from_json(cls, data, name="file") -> "BasisFunction":
        """Read ``[{"basis": "C2" | "*", "value": "1/2"}, ...]``."""
        if not isinstance(data, list):
            raise EulerKError("basis values must be a JSON list")
        entries = []
        for i, item in enumerate(data):
            try:
                spec, raw = item["basis"], item["value"]
            except (TypeError, KeyError):
                raise EulerKError(f"entry {i}: expected {{basis, value}}") from None
            try:
                value = Fraction(str(raw))
            except (ValueError, ZeroDivisionError):
                raise EulerKError(f"entry {i}: bad rational {raw!r}") from None
            entries.append((parse_basis(str(spec)), value))
        return cls(entries, name=name)

    @classmethod
    def load(cls, path) -> "BasisFunction":
        path = Path(path)
        try:
            data = json.loads(path.read_text())
        except OSError as exc:
            raise EulerKError(f"cannot read {path}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise EulerKError(f"{path}: invalid JSON ({exc.msg})") from None
        return cls.from_json(data, name=str(path))

    def to_json(self) -> list[dict]:
        return [{"basis": e.spec, "value": format_rational(v)} for e, v in self.entries]

    def __repr__(self):
        return f"BasisFunction({self.name!r}, {len(self._table)} entries)"


def _baez_dolan(elem: BasisElement) -> Fraction:
    return Fraction(1, elem.order)


BAEZ_DOLAN = BasisFunction([(STAR, 1)], rule=_baez_dolan, name="baez-dolan")
"""Homotopy cardinality on p-finite classifying spaces: [BG] -> 1/|G|."""


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


__all__ = [
    "BAEZ_DOLAN",
    "BasisElement",
    "BasisFunction",
    "STAR",
    "basis_element",
    "format_rational",
    "parse_basis",
]
