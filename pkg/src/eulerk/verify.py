"""Named verification suites, shared by the CLI and the test suite."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .basis import STAR, BasisFunction, basis_element, format_rational, parse_basis
from .groups import (
    build_catalog_group,
    canonical_key,
    catalog_specs,
    is_prime_power,
    mono_rep_count,
    normal_subgroups,
    quotient,
    rep_count,
    sylow_decomposition,
)
from .invariants import (
    RATIONAL_EULER,
    ChiK,
    baez_dolan,
    delta0,
    evaluate_assembled,
    evaluate_structural,
    extend,
    homotopy_cardinality,
)
from .spaces import BG, EMPTY, POINT, Disjoint, Pushout, Susp, Wedge, k0_class, leaves, pair, parse, sphere


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, description: str):
        self.checked += 1
        if not ok:
            self.failures.append(description)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {self.checked - len(self.failures)}/{self.checked} checks passed, {status} ({self.seconds:.2f}s)"


def distinct_groups(specs):
    """First spec of each isomorphism class, in input order."""
    seen = set()
    out = []
    for s in specs:
        g = build_catalog_group(s)
        k = canonical_key(g)
        if k not in seen:
            seen.add(k)
            out.append(g)
    return out


def p_groups(max_order=16):
    return [g for g in distinct_groups(catalog_specs(max_order)) if g.order > 1 and is_prime_power(g.order)]


def delta_oracle(max_order=16) -> SuiteResult:
    """delta0(K) on BH against the brute-force count of injective classes."""
    res = SuiteResult("delta-oracle")
    groups = p_groups(max_order)
    res.lines.append("groups: " + ", ".join(g.name for g in groups))
    for k in groups:
        d = delta0(k)
        for h in groups:
            if is_prime_power(k.order) != is_prime_power(h.order):
                continue
            got = d(BG(h))
            want = mono_rep_count(k, h)
            res.check(got == want, f"delta0[{k.name}](B {h.name}) = {got}, brute force {want}")
    return res


def factorization(max_order=16) -> SuiteResult:
    """rep(G, H) = sum over normal N of mono(G/N, H) on all catalog pairs."""
    res = SuiteResult("factorization")
    groups = [build_catalog_group(s) for s in catalog_specs(max_order)]
    quotients = {g: [quotient(g, n) for n in normal_subgroups(g)] for g in groups}
    for g in groups:
        for h in groups:
            lhs = rep_count(g, h)
            rhs = sum(mono_rep_count(q, h) for q in quotients[g])
            res.check(lhs == rhs, f"rep({g.name}, {h.name}) = {lhs} but factorized sum = {rhs}")
    return res


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-30, 30), rng.randint(1, 12))


RECONSTRUCTION_BASIS = ["C2", "C4", "C2xC2", "C8", "C4xC2", "C2xC2xC2", "D4", "Q8"]


def reconstruction(trials=100, seed=0) -> SuiteResult:
    """Random values on [*] and the 2-groups of order <= 8 are reproduced."""
    res = SuiteResult("reconstruction")
    rng = random.Random(seed)
    elems = [STAR] + [parse_basis(s) for s in RECONSTRUCTION_BASIS]
    for t in range(trials):
        f = BasisFunction(((e, _random_fraction(rng)) for e in elems), name=f"trial{t}")
        cf = extend(f)
        for e in elems:
            leaf = POINT if e.is_star else BG(e.group)
            got = cf(leaf)
            res.check(got == f.value(e), f"trial {t}: {e} -> {got}, prescribed {f.value(e)}")
    return res


def nilpotent_pool(max_order=36, max_sylow=None):
    """Nilpotent catalog groups, optionally with Sylow subgroups of order <= ``max_sylow``."""
    pool = []
    for g in distinct_groups(catalog_specs(max_order)):
        sylows, nilpotent = sylow_decomposition(g)
        if nilpotent and (max_sylow is None or all(s.order <= max_sylow for s in sylows.values())):
            pool.append(g)
    return pool


def random_expression(rng: random.Random, pool, max_depth=6):
    """A random sugared expression of depth <= ``max_depth``."""

    def gen(d):
        if d == 0 or rng.random() < 0.3:
            r = rng.random()
            if r < 0.7:
                return BG(rng.choice(pool))
            return POINT if r < 0.9 else EMPTY
        kind = rng.choice(["pushout", "pushout", "disjoint", "susp", "wedge"])
        if kind == "pushout":
            return Pushout(gen(d - 1), gen(d - 1), gen(d - 1))
        if kind == "disjoint":
            return Disjoint(tuple(gen(d - 1) for _ in range(rng.randint(1, 3))))
        if kind == "susp":
            return Susp(gen(d - 1))
        return Wedge(gen(d - 1), gen(d - 1))

    return gen(max_depth)


def random_basis_function(rng: random.Random, x) -> BasisFunction:
    elems = {STAR}
    for g in leaves(x):
        sylows, _ = sylow_decomposition(g)
        elems.update(basis_element(s) for s in sylows.values())
    return BasisFunction(((e, _random_fraction(rng)) for e in sorted(elems)), name="random")


def assembly(trials=200, seed=0, max_depth=6, max_order=36) -> SuiteResult:
    """Assembled value = nilpotent-leaf structural value = K0 pairing."""
    res = SuiteResult("assembly")
    rng = random.Random(seed)
    pool = nilpotent_pool(max_order)
    for t in range(trials):
        x = random_expression(rng, pool, max_depth)
        f = random_basis_function(rng, x)
        a = evaluate_assembled(f, x)
        s = evaluate_structural(f, x)
        p = pair(k0_class(x), f)
        res.check(a == s == p, f"trial {t}: {x}: assembled {a}, structural {s}, pairing {p}")
    return res


def fibration_failure() -> SuiteResult:
    res = SuiteResult("fibration-failure")
    chi = baez_dolan()
    c6 = chi(parse("B(C6)"))
    c2 = chi(parse("B(C2)"))
    c3 = chi(parse("B(C3)"))
    product = c2 * c3
    res.lines.append(
        f"chi(B C6) = {format_rational(c6)} != chi(B C2) * chi(B C3) = {format_rational(product)}"
    )
    res.check(c6 == Fraction(-1, 6), f"chi(B C6) = {c6}, expected -1/6")
    res.check(product == Fraction(1, 6), f"chi(B C2) chi(B C3) = {product}, expected 1/6")
    res.check(c6 != product, "fibration property unexpectedly holds")
    # the homotopy cardinality of B C6 itself would be the multiplicative answer
    res.check(homotopy_cardinality([6]) == product, "homotopy cardinality of B C6 is not 1/6")
    return res


def wall() -> SuiteResult:
    res = SuiteResult("wall")
    chi = baez_dolan()
    w23 = chi(parse("wedge(B(C2), B(C3))"))
    w33 = chi(parse("wedge(B(C3), B(C3))"))
    res.lines.append(
        f"2 * chi(B C2 v B C3) = 2 * {format_rational(w23)} = {format_rational(2 * w23)}; "
        f"chi(B C3 v B C3) = {format_rational(w33)}"
    )
    res.check(w23 == Fraction(-1, 6), f"chi(B C2 v B C3) = {w23}, expected -1/6")
    res.check(w33 == Fraction(-1, 3), f"chi(B C3 v B C3) = {w33}, expected -1/3")
    res.check(2 * w23 == w33, "index-2 relation fails")
    return res


GOLDEN_PAIRS = [(2, 3), (2, 5), (3, 5)]


def golden() -> SuiteResult:
    """chi(B C_pq) = 1/p + 1/q - 1, on the leaf and through the pushout square."""
    res = SuiteResult("golden")
    chi = baez_dolan()
    for p, q in GOLDEN_PAIRS:
        want = Fraction(1, p) + Fraction(1, q) - 1
        leaf = chi(parse(f"B(C{p * q})"))
        res.check(leaf == want, f"chi(B C{p * q}) = {leaf}, expected {want}")
        # B C_pq -> B C_p, B C_q with pushout a point: chi(*) = chi(Bp) + chi(Bq) - chi(Bpq)
        square = parse(f"pushout(B(C{p * q}); B(C{p}); B(C{q}))")
        res.check(chi(square) == 1, f"pushout square for pq={p * q} evaluates to {chi(square)}, not chi(*) = 1")
        res.check(
            chi(parse(f"B(C{p})")) + chi(parse(f"B(C{q})")) - chi(POINT) == leaf,
            f"pushout relation fails for ({p}, {q})",
        )
    return res


def spheres(max_n=10) -> SuiteResult:
    res = SuiteResult("spheres")
    chars = [baez_dolan(), RATIONAL_EULER, ChiK(build_catalog_group("C2")), ChiK(build_catalog_group("Q8")), delta0(build_catalog_group("C1"))]
    for n in range(max_n + 1):
        x = sphere(n)
        for c in chars:
            got = c(x)
            res.check(got == 1 + (-1) ** n, f"{c.name}(S^{n}) = {got}")
    return res


SUITES = {
    "delta-oracle": delta_oracle,
    "reconstruction": reconstruction,
    "assembly": assembly,
    "fibration-failure": fibration_failure,
    "wall": wall,
    "golden": golden,
    "factorization": factorization,
    "spheres": spheres,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    t0 = time.perf_counter()
    res = fn(**kwargs)
    res.seconds = time.perf_counter() - t0
    return res
