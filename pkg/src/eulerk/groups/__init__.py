"""Finite groups as Cayley tables, and the searches built on them."""

from ._backend import BACKEND
from .canon import canonical_key, canonical_name, invariant_factors
from .catalog import build_catalog_group, catalog_specs, cyclic, dihedral, direct_product, quaternion, symmetric
from .core import FiniteGroup, GroupHom, NormalSubgroup
from .homs import enumerate_homs, find_isomorphism, is_isomorphic, mono_rep_count, rep_count
from .subgroups import (
    all_subgroups,
    is_prime_power,
    normal_subgroups,
    prime_factors,
    quotient,
    subgroup_as_group,
    sylow_decomposition,
)

__all__ = [
    "BACKEND",
    "FiniteGroup",
    "GroupHom",
    "NormalSubgroup",
    "all_subgroups",
    "build_catalog_group",
    "canonical_key",
    "canonical_name",
    "catalog_specs",
    "cyclic",
    "invariant_factors",
    "dihedral",
    "direct_product",
    "enumerate_homs",
    "find_isomorphism",
    "is_isomorphic",
    "is_prime_power",
    "mono_rep_count",
    "normal_subgroups",
    "prime_factors",
    "quaternion",
    "quotient",
    "rep_count",
    "subgroup_as_group",
    "sylow_decomposition",
    "symmetric",
]
