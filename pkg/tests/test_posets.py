import random
from fractions import Fraction

import pytest

from eulerk.groups import build_catalog_group, catalog_specs, cyclic
from eulerk.posets import invert, mobius, mobius_report, quotient_poset, restriction_multiplicity

from oracles import classical_mobius

G = build_catalog_group
CATALOG = catalog_specs(16)


@pytest.mark.parametrize("n", [1, 2, 4, 6, 8, 12, 30, 36])
def test_cyclic_poset_is_divisor_lattice(n):
    # quotients of C_n are C_d for d | n, and mu(C_n, C_d) is the number-theoretic mu(n/d)
    poset = quotient_poset(cyclic(n))
    mu = mobius(poset)
    for s in range(len(poset)):
        d = poset.target(s).order
        assert mu(poset.top, s) == classical_mobius(n // d)


def test_node_order():
    poset = quotient_poset(G("D4"))
    sizes = [len(k) for k in poset.kernels()]
    assert sizes == sorted(sizes)
    assert poset.kernels()[poset.top] == [0]
    assert len(poset.kernels()[poset.bottom]) == 8


@pytest.mark.parametrize("spec", CATALOG)
def test_mobius_is_inverse_of_zeta(spec):
    poset = quotient_poset(G(spec))
    mu = mobius(poset)
    n = len(poset)
    for t in range(n):
        for s in poset.below[t]:
            # sum_{S <= R <= T} mu(T, R) = [S == T]
            total = sum(mu(t, r) for r in range(n) if poset.leq(s, r) and poset.leq(r, t))
            assert total == (1 if s == t else 0)
        for s in range(n):
            if not poset.leq(s, t):
                assert mu(t, s) == 0


@pytest.mark.parametrize("spec", CATALOG)
def test_mu_row_sums_vanish(spec):
    poset = quotient_poset(G(spec))
    if len(poset) > 1:
        mu = mobius(poset)
        assert sum(mu(poset.top, s) for s in range(len(poset))) == 0


@pytest.mark.parametrize("spec", CATALOG)
def test_invert_round_trip(spec):
    poset = quotient_poset(G(spec))
    mu = mobius(poset)
    rng = random.Random(spec)
    g = {s: rng.randint(-20, 20) for s in range(len(poset))}
    f = {t: sum(g[s] for s in poset.below[t]) for t in range(len(poset))}
    assert invert(poset, mu, f) == {s: Fraction(v) for s, v in g.items()}


@pytest.mark.parametrize("spec", CATALOG)
def test_restriction_multiplicity_is_zero_or_one(spec):
    poset = quotient_poset(G(spec))
    for t in range(len(poset)):
        for s in range(len(poset)):
            m = restriction_multiplicity(poset, t, s)
            assert m == (1 if poset.leq(s, t) else 0)


def test_split_hook():
    poset = quotient_poset(G("C2xC2"))
    seen = []

    def split(t, s, mu_bar, reps):
        seen.append((t, s))
        return [mu_bar]

    assert mobius(poset, split).mu == mobius(poset).mu
    assert seen

    def bad(t, s, mu_bar, reps):
        return [mu_bar + 1]

    with pytest.raises(ValueError):
        mobius(poset, bad)


def test_klein_four_values():
    poset = quotient_poset(G("C2xC2"))
    mu = mobius(poset)
    # top, three order-2 quotients, bottom
    assert [mu(poset.top, s) for s in range(len(poset))] == [1, -1, -1, -1, 2]


def test_report_shape():
    poset = quotient_poset(G("S3"))
    rep = mobius_report(poset, mobius(poset))
    assert rep["group"] == "S3" and rep["order"] == 6
    assert [n["quotient_order"] for n in rep["nodes"]] == [6, 2, 1]
    assert rep["mu"][0] == [1, -1, 0]
