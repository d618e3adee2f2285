import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerk.basis import BAEZ_DOLAN, STAR, BasisFunction, parse_basis
from eulerk.errors import MissingValueError, NonNilpotentError, OrderingError
from eulerk.groups import build_catalog_group, catalog_specs, mono_rep_count, sylow_decomposition
from eulerk.invariants import (
    RATIONAL_EULER,
    ChiK,
    baez_dolan,
    chi_K,
    delta0,
    delta0_expansion,
    evaluate_assembled,
    evaluate_structural,
    extend,
    homotopy_cardinality,
    project_prime,
    rational_euler,
    solve_basis_coefficients,
)
from eulerk.spaces import BG, POINT, k0_class, pair, parse, sphere
from eulerk.verify import nilpotent_pool, p_groups, random_basis_function, random_expression

from oracles import baez_dolan_nilpotent, cyclic_rep

G = build_catalog_group


def test_homotopy_cardinality():
    assert homotopy_cardinality([2]) == Fraction(1, 2)
    assert homotopy_cardinality([2, 4, 8]) == Fraction(1, 4)
    assert homotopy_cardinality([]) == 1
    with pytest.raises(ValueError):
        homotopy_cardinality([0])


@pytest.mark.parametrize("spec", [s for s in catalog_specs(36) if sylow_decomposition(G(s))[1]])
def test_baez_dolan_on_nilpotent_leaves(spec):
    # closed form independent of the basis machinery
    g = G(spec)
    assert baez_dolan()(BG(g)) == baez_dolan_nilpotent(g.order)


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 5), (2, 7), (3, 7), (5, 7)])
def test_cyclic_pq(p, q):
    assert baez_dolan()(parse(f"B(C{p * q})")) == Fraction(1, p) + Fraction(1, q) - 1


def test_rational_euler():
    assert rational_euler(parse("wedge(B(C2), B(C3))")) == 1
    assert RATIONAL_EULER(parse("disjoint(B(S4), point, empty)")) == 2
    assert rational_euler(sphere(4)) == 2


def test_chi_k_counts_components_and_cyclic_maps():
    trivial = G("C1")
    assert chi_K(trivial, parse("disjoint(B(S3), B(Q8), point)")) == 3
    for spec in ["S3", "D4", "Q8", "S4"]:
        assert chi_K(G("C2"), BG(G(spec))) == cyclic_rep(2, G(spec))
    assert chi_K(G("C2"), parse("pushout(point; point; B(C4))")) == 2
    assert ChiK(G("C2")).name == "chi-K=C2"


@pytest.mark.parametrize("k", [g.name for g in p_groups(16)])
def test_delta0_vanishes_below(k):
    kg = G(k)
    d = delta0(kg)
    assert d(POINT) == 0
    for h in p_groups(16):
        if h.order <= kg.order:
            assert d(BG(h)) == (mono_rep_count(kg, h))
            if h.order < kg.order:
                assert d(BG(h)) == 0


def test_delta0_on_non_p_groups():
    # the identity rep = sum_N mono(G/N, H) also makes delta0 exact on mixed orders
    for k in ["S3", "C6", "D6"]:
        for h in ["S3", "C6", "D6", "S4", "C12"]:
            kg, hg = G(k), G(h)
            if kg.order * hg.order <= 1296:
                assert delta0(kg)(BG(hg)) == mono_rep_count(kg, hg)


def test_delta0_expansion_values():
    exp = sorted((c, q.order) for c, q in delta0_expansion(G("C2xC2")))
    assert exp == [(-3, 2), (1, 4), (2, 1)]
    assert delta0(G("C4"))(BG(G("C4"))) == 2
    assert delta0(G("C4"))(BG(G("C2"))) == 0


def test_solver_small():
    f = [(STAR, 1), (parse_basis("C2"), Fraction(1, 2))]
    coefs = solve_basis_coefficients(f)
    assert [c for _, c in coefs] == [1, Fraction(-1, 2)]


def test_solver_rejects_bad_order():
    with pytest.raises(OrderingError):
        solve_basis_coefficients([(parse_basis("C2"), 1), (STAR, 1)])
    with pytest.raises(OrderingError):
        BasisFunction.ordered([(parse_basis("C4"), 1), (parse_basis("C2"), 1)])
    with pytest.raises(OrderingError):
        solve_basis_coefficients([(STAR, 1), (STAR, 2)])


def test_reproduces_baez_dolan():
    elems = [STAR] + [parse_basis(s) for s in ["C2", "C4", "C2xC2", "D4", "Q8", "C3", "C9"]]
    f = BasisFunction(((e, BAEZ_DOLAN.value(e)) for e in elems))
    cf = extend(f)
    for e in elems[1:]:
        assert cf(BG(e.group)) == Fraction(1, e.order)
    assert cf(POINT) == 1


@settings(max_examples=25, deadline=None)
@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=20), min_size=6, max_size=6))
def test_reconstruction_property(values):
    elems = [STAR] + [parse_basis(s) for s in ["C2", "C3", "C4", "C2xC2", "C5"]]
    f = BasisFunction(zip(elems, values))
    cf = extend(f)
    assert cf(POINT) == values[0]
    for e, v in zip(elems[1:], values[1:]):
        assert cf(BG(e.group)) == v


def test_missing_value():
    f = BasisFunction([(STAR, 1)])
    with pytest.raises(MissingValueError):
        evaluate_assembled(f, parse("B(C2)"))


def test_non_nilpotent_assembly():
    with pytest.raises(NonNilpotentError):
        baez_dolan()(parse("B(S3)"))


def test_project_prime():
    x = parse("pushout(B(C6); B(C2); B(C3))")
    assert project_prime(baez_dolan(), 2, x) == 1
    assert project_prime(RATIONAL_EULER, 3, parse("B(C12)")) == 1


def test_per_prime_breakdown():
    bd = baez_dolan()
    x = parse("wedge(B(C2), B(C3))")
    assert bd(x) == Fraction(-1, 6)
    assert bd.per_prime(x) == {2: Fraction(1, 2), 3: Fraction(1, 3)}


def test_three_evaluators_agree_seeded():
    rng = random.Random(11)
    pool = nilpotent_pool(36)
    for _ in range(40):
        x = random_expression(rng, pool, 5)
        f = random_basis_function(rng, x)
        a = evaluate_assembled(f, x)
        assert a == evaluate_structural(f, x) == pair(k0_class(x), f)


@pytest.mark.parametrize("n", range(11))
def test_sphere_values(n):
    x = sphere(n)
    for c in [baez_dolan(), RATIONAL_EULER, ChiK(G("S3")), delta0(G("C1"))]:
        assert c(x) == 1 + (-1) ** n
