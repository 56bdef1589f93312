"""Acceptance suite: one test per criterion, at the stated counts and tolerances.

The seeded harness runs once per module; each test then checks the laws it
owns, including that the population had the required size. Population shapes
are re-derived from fresh generators with the same seed, so a harness that
quietly shrank its sample would fail here.
"""

import random
import time
from math import comb, prod

import pytest

from monomult import verify
from monomult.decompose import IrreducibleComponent, primary_decomposition
from monomult.formulas import check_hypothesis
from monomult.graphs import connected_graphs
from monomult.hilbert import clear_cache, multiplicity
from monomult.ideal import MonomialIdeal, intersect, power

SEED = 0
EXAMPLE_MULTS = {1: 26, 2: 112, 3: 294, 4: 608}


@pytest.fixture(scope="module")
def report():
    clear_cache()
    return verify.run_verify("all", seed=SEED)


def law_ok(report, name, cases):
    law = report.law(name)
    assert law.cases == cases, f"{name}: {law.cases} cases, expected {cases}"
    assert law.failures == 0, f"{name}: {law.first_counterexample}"


def example_ideal():
    return intersect(MonomialIdeal.from_generators(3, [(2, 0, 0), (0, 2, 0), (0, 0, 4)]),
                     MonomialIdeal.from_generators(3, [(3, 0, 0), (0, 3, 0), (0, 0, 2)]))


@pytest.mark.criterion(1, "example multiplicities 26, 112, 294, 608 exact, under 10 s")
def test_example_exact():
    clear_cache()
    start = time.perf_counter()
    I = example_ideal()
    got = {s: multiplicity(power(I, s)) for s in EXAMPLE_MULTS}
    elapsed = time.perf_counter() - start
    assert got == EXAMPLE_MULTS
    assert elapsed < 10.0, f"{elapsed:.2f}s"


@pytest.mark.criterion(2, "hypothesis fails on the example; naive 104, 260, 520 differ from engine")
def test_counterexample_discrimination(report):
    I = example_ideal()
    assert not check_hypothesis(primary_decomposition(I))
    for s, naive in {2: 104, 3: 260, 4: 520}.items():
        assert 26 * comb(3 + s - 1, s - 1) == naive
        assert naive != multiplicity(power(I, s))
    law_ok(report, "example_hypothesis_fails", 1)
    law_ok(report, "example_naive_formula_differs", 3)
    law_ok(report, "example_mult", 4)


@pytest.mark.criterion(3, "colon law on 200 irreducible ideals, s in {2,3,4}")
def test_colon_law(report):
    rng = random.Random(f"{SEED}:colon")
    for _ in range(verify.COLON_CASES):
        Q, last = verify.random_irreducible(rng)
        assert Q.n <= 5 and max(max(g) for g in Q.gens) <= 4
        assert last == max(Q.gens, key=lambda g: max(i for i, e in enumerate(g) if e))
    assert verify.COLON_CASES == 200
    law_ok(report, "colon_drops_power", 200 * 3)


@pytest.mark.criterion(4, "irreducible power closed form on 100 ideals, s <= 4")
def test_irreducible_power(report):
    assert verify.IRREDUCIBLE_POWER_CASES == 100
    law_ok(report, "irreducible_power_mult", 100 * 4)
    # Spot-check the law outside the harness.
    Q = MonomialIdeal.from_generators(3, [(2, 0, 0), (0, 3, 0), (0, 0, 1)])
    exps = IrreducibleComponent.from_ideal(Q).exponents
    for s in range(1, 5):
        assert multiplicity(power(Q, s)) == prod(exps) * comb(3 + s - 1, s - 1)


def power_sum_population():
    rng = random.Random(f"{SEED}:power_sum")
    return [verify.random_monomial_ideal(rng) for _ in range(verify.POWER_SUM_CASES)]


@pytest.mark.criterion(5, "component sum equals engine on 100 arbitrary ideals, s <= 3")
def test_component_sum(report):
    population = power_sum_population()
    assert len(population) == 100
    for I in population:
        assert I.n <= 4 and len(I.gens) <= 5 and max(max(g) for g in I.gens) <= 3
    law_ok(report, "component_sum", 100 * 3)
    law_ok(report, "decomposition_roundtrip", 100)


@pytest.mark.criterion(6, "closed form matches engine on hypothesis-passing ideals")
def test_closed_form(report):
    passing = sum(check_hypothesis(primary_decomposition(I)) for I in power_sum_population())
    assert passing > 0
    law_ok(report, "closed_form", passing * 3)


@pytest.mark.criterion(7, "special-power laws on 100 ideals, m <= 3, and the m^h formula")
def test_special_powers(report):
    assert verify.SPECIAL_CASES == 100
    for name in ("special_intersect", "special_product", "special_sum", "special_irreducible",
                 "special_primary", "special_radical", "special_decomposition"):
        law_ok(report, name, 100 * 3)
    rng = random.Random(f"{SEED}:special")
    passing = 0
    for _ in range(verify.SPECIAL_CASES):
        I = verify.random_monomial_ideal(rng)
        verify.random_monomial_ideal(rng, n=I.n)
        passing += check_hypothesis(primary_decomposition(I))
    law_ok(report, "special_power_mult", passing * 3 * 3)


@pytest.mark.criterion(8, "all connected graphs n <= 5, >= 500 weighted orientations, under 5 min")
def test_graphs(report):
    population = verify.graph_population(SEED)
    assert len(population) >= 500
    assert all(set(D.weights) <= {1, 2, 3} for D in population)
    every_graph = {(G.n, G.edges) for n in range(2, 6) for G in connected_graphs(n)}
    assert len(every_graph) == 30
    assert {(D.n, D.underlying.edges) for D in population} == every_graph
    cases = len(population)
    for name in ("graph_cover_roundtrip", "graph_cover_matches_decomposer",
                 "graph_height_is_alpha"):
        law_ok(report, name, cases)
    law_ok(report, "oriented_mult", cases * 2 * 2)
    assert report.scope_seconds["graphs"] < 300.0


@pytest.mark.criterion(9, "square-free formula on 50 ideals, m, s <= 3, and the m = 1 reduction")
def test_squarefree(report):
    rng = random.Random(f"{SEED}:squarefree")
    for _ in range(verify.SQUAREFREE_CASES):
        I = verify.random_squarefree(rng)
        assert I.is_squarefree()
    assert verify.SQUAREFREE_CASES == 50
    law_ok(report, "squarefree_mult", 50 * 3 * 3)
    law_ok(report, "squarefree_m1_reduction", 50 * 3)


@pytest.mark.criterion(10, "series equals brute-force counts to degree 12 for every touched ideal")
def test_hilbert_oracle(report):
    assert verify.ORACLE_MAX_DEGREE == 12
    assert report.touched > 1000
    assert report.oracle_skipped == 0
    law_ok(report, "hilbert_oracle", report.touched)
    assert report.ok and not report.budget_exhausted
