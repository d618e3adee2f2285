"""K0 classes of expressions in the free basis of p-finite classifying spaces."""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction

from ..basis import STAR, BasisElement, BasisFunction, basis_element
from ..errors import NonNilpotentError
from ..groups import FiniteGroup, sylow_decomposition
from .expr import SpaceExpr, fold


class K0Class(Mapping):
    """Finitely supported integer combination of basis elements."""

    __slots__ = ("_coef",)

    def __init__(self, coefs=None):
        clean = {}
        for k, v in dict(coefs or {}).items():
            if v:
                clean[k] = clean.get(k, 0) + int(v)
        self._coef = {k: v for k, v in clean.items() if v}

    def __getitem__(self, key):
        return self._coef[key]

    def get(self, key, default=0):
        return self._coef.get(key, default)

    def __iter__(self):
        return iter(sorted(self._coef, key=lambda e: e.sort_key))

    def __len__(self):
        return len(self._coef)

    def __eq__(self, other):
        if isinstance(other, K0Class):
            return self._coef == other._coef
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coef.items()))

    def __add__(self, other):
        out = dict(self._coef)
        for k, v in other._coef.items():
            out[k] = out.get(k, 0) + v
        return K0Class(out)

    def __neg__(self):
        return K0Class({k: -v for k, v in self._coef.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n: int):
        return K0Class({k: n * v for k, v in self._coef.items()})

    def __repr__(self):
        return f"K0Class({self})"

    def __str__(self):
        if not self._coef:
            return "0"
        terms = sorted(self._coef.items(), key=lambda kv: (kv[1] < 0, kv[0].sort_key))
        out = ""
        for i, (elem, c) in enumerate(terms):
            mag = "" if abs(c) == 1 else str(abs(c))
            if i == 0:
                out += ("-" if c < 0 else "") + mag + str(elem)
            else:
                out += (" - " if c < 0 else " + ") + mag + str(elem)
        return out

    def to_json(self) -> dict:
        groups = [
            {"prime": e.prime, "spec": e.spec, "coef": c}
            for e, c in ((e, self._coef[e]) for e in self)
            if not e.is_star
        ]
        return {"star": self._coef.get(STAR, 0), "groups": groups}

    @classmethod
    def from_json(cls, data) -> "K0Class":
        from ..basis import parse_basis

        coefs = {STAR: int(data.get("star", 0))}
        for g in data.get("groups", []):
            elem = parse_basis(g["spec"])
            if elem.prime != g["prime"]:
                raise ValueError(f"prime mismatch for {g['spec']}")
            coefs[elem] = coefs.get(elem, 0) + int(g["coef"])
        return cls(coefs)


ZERO = K0Class()


def nilpotent_sylows(g: FiniteGroup) -> dict[int, FiniteGroup]:
    """Sylow subgroups of a nilpotent group; raise for anything else."""
    sylows, nilpotent = sylow_decomposition(g)
    if not nilpotent:
        raise NonNilpotentError(
            f"B({g.name}): {g.name} is not nilpotent, so its classifying space "
            "does not split into prime pieces"
        )
    return sylows


def leaf_class(g: FiniteGroup) -> K0Class:
    """[BG] = sum_p [B Syl_p G] - (k-1)[*] for nilpotent G with k primes."""
    sylows = nilpotent_sylows(g)
    coefs: dict[BasisElement, int] = {STAR: 1 - len(sylows)}
    for p in sorted(sylows):
        e = basis_element(sylows[p])
        coefs[e] = coefs.get(e, 0) + 1
    return K0Class(coefs)


def k0_class(x: SpaceExpr) -> K0Class:
    cache: dict[FiniteGroup, K0Class] = {}

    def leaf(g):
        if g not in cache:
            cache[g] = leaf_class(g)
        return cache[g]

    return fold(
        x,
        empty=ZERO,
        point=K0Class({STAR: 1}),
        leaf=leaf,
        pushout=lambda a, b, c: b + c - a,
    )


def torsion_support(x: SpaceExpr) -> set[int]:
    """Primes carrying a nonzero p-group coefficient in the class of ``x``."""
    return {e.prime for e in k0_class(x) if not e.is_star}


def pair(cls: K0Class, f: BasisFunction) -> Fraction:
    """Evaluate the homomorphism K0 -> Q determined by ``f`` on ``cls``."""
    return sum((c * f.value(e) for e, c in cls.items()), Fraction(0))
