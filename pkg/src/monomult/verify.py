"""Seeded verification harness.

Each scope draws a deterministic population of ideals or graphs, checks a set
of laws against the Hilbert engine and records every ideal the engine was
asked about. Every run ends with the ``hilbert_oracle`` law, which compares
the series expansion of each recorded ideal with brute-force standard
monomial counts.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from math import prod

from . import decompose, formulas, graphs
from .errors import HypothesisViolatedError, ResourceLimitError
from .hilbert import hilbert_summary, k_polynomial, standard_monomial_counts
from .ideal import (
    MonomialIdeal,
    colon_by_monomial,
    ideal_sum,
    intersect,
    intersect_all,
    power,
    product,
    radical,
    special_power,
    variable,
)

SCOPES = ("example", "colon", "irreducible_power", "power_sum", "special", "squarefree", "graphs",
          "bidirected")

# Population sizes and ranges.
COLON_CASES = 200
IRREDUCIBLE_POWER_CASES = 100
POWER_SUM_CASES = 100
SPECIAL_CASES = 100
SQUAREFREE_CASES = 50
GRAPH_MAX_VERTICES = 5
GRAPH_ASSIGNMENTS_PER_GRAPH = 20
GRAPH_EXHAUSTIVE_VERTICES = 4
GRAPH_WEIGHTS = (1, 2, 3)
ORACLE_MAX_DEGREE = 12

EXAMPLE_COMPONENTS = (((2, 0, 0), (0, 2, 0), (0, 0, 4)), ((3, 0, 0), (0, 3, 0), (0, 0, 2)))
EXAMPLE_MULTS = {1: 26, 2: 112, 3: 294, 4: 608}
EXAMPLE_NAIVE = {2: 104, 3: 260, 4: 520}


class BudgetExhausted(Exception):
    pass


@dataclass
class LawResult:
    name: str
    cases: int = 0
    failures: int = 0
    first_counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self):
        return {"law": self.name, "cases": self.cases, "failures": self.failures,
                "first_counterexample": self.first_counterexample}


@dataclass
class VerifyReport:
    scope: str
    seed: int
    laws: list = field(default_factory=list)
    budget_exhausted: bool = False
    elapsed: float = 0.0
    scope_seconds: dict = field(default_factory=dict)
    touched: int = 0
    oracle_skipped: int = 0

    @property
    def ok(self) -> bool:
        return all(law.ok for law in self.laws)

    def law(self, name: str) -> LawResult:
        return next(law for law in self.laws if law.name == name)

    def to_dict(self):
        return {"scope": self.scope, "seed": self.seed, "ok": self.ok,
                "budget_exhausted": self.budget_exhausted,
                "touched_ideals": self.touched, "oracle_skipped": self.oracle_skipped,
                "laws": [law.to_dict() for law in self.laws]}


class Harness:
    def __init__(self, seed: int, budget: float | None = None):
        self.seed = seed
        self.deadline = None if budget is None else time.monotonic() + budget
        self.laws: dict[str, LawResult] = {}
        self.touched: dict[tuple, MonomialIdeal] = {}
        self.oracle_skipped = 0

    def rng(self, scope: str) -> random.Random:
        return random.Random(f"{self.seed}:{scope}")

    def tick(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExhausted

    def check(self, name: str, ok: bool, case) -> bool:
        law = self.laws.setdefault(name, LawResult(name))
        law.cases += 1
        if not ok:
            law.failures += 1
            if law.first_counterexample is None:
                law.first_counterexample = case() if callable(case) else str(case)
        return ok

    def mult(self, J: MonomialIdeal) -> int:
        self.touched.setdefault((J.n, J.gens), J)
        return hilbert_summary(J).mult

    def engine_mult(self, I: MonomialIdeal, m: int = 1, s: int = 1) -> int:
        return self.mult(power(special_power(I, m), s))


# -- populations -------------------------------------------------------------------

def random_irreducible(rng: random.Random, max_n: int = 5, max_exp: int = 4):
    """A random irreducible ideal and its pure-power generator of highest variable index."""
    n = rng.randint(1, max_n)
    support = sorted(rng.sample(range(n), rng.randint(1, n)))
    gens = [variable(n, i, rng.randint(1, max_exp)) for i in support]
    return MonomialIdeal.from_generators(n, gens), gens[-1]


def random_monomial_ideal(rng: random.Random, n: int | None = None, max_n: int = 4,
                          max_gens: int = 5, max_exp: int = 3) -> MonomialIdeal:
    """A proper nonzero monomial ideal with up to ``max_gens`` generators."""
    if n is None:
        n = rng.randint(1, max_n)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        g = [0] * n
        while not any(g):
            g = [rng.randint(0, max_exp) for _ in range(n)]
        gens.append(tuple(g))
    return MonomialIdeal.from_generators(n, gens)


def random_squarefree(rng: random.Random, max_n: int = 5, max_gens: int = 5) -> MonomialIdeal:
    return random_monomial_ideal(rng, n=rng.randint(1, max_n), max_gens=max_gens, max_exp=1)


def random_orientation(rng: random.Random, G: graphs.SimpleGraph, weights=GRAPH_WEIGHTS):
    arcs = [(i, j) if rng.random() < 0.5 else (j, i) for i, j in sorted(G.edges)]
    return graphs.WeightedOrientedGraph.build(G.n, arcs, [rng.choice(weights) for _ in range(G.n)])


# -- scopes ------------------------------------------------------------------------

def example_ideal() -> MonomialIdeal:
    return intersect_all([MonomialIdeal.from_generators(3, q) for q in EXAMPLE_COMPONENTS])


def run_example(h: Harness):
    Q1, Q2 = (MonomialIdeal.from_generators(3, q) for q in EXAMPLE_COMPONENTS)
    I = intersect(Q1, Q2)
    expected = MonomialIdeal.from_generators(
        3, [(0, 3, 0), (3, 0, 0), (0, 2, 2), (2, 0, 2), (0, 0, 4)])
    h.check("example_generators", I == expected, I)
    engine = {}
    for s, want in EXAMPLE_MULTS.items():
        engine[s] = h.mult(power(I, s))
        h.check("example_mult", engine[s] == want, f"s={s}: engine {engine[s]} != {want}")
    pd = decompose.primary_decomposition(I)
    h.check("example_height", pd.height == 3, pd.height)
    h.check("example_hypothesis_fails", not formulas.check_hypothesis(pd), pd)
    base = engine[1]
    for s, naive in EXAMPLE_NAIVE.items():
        value = base * formulas.power_binomial(3, s)
        h.check("example_naive_formula_differs", value == naive and value != engine[s],
                f"s={s}: naive {value}, engine {engine[s]}")
    parts = [h.mult(Q1), h.mult(Q2), h.mult(ideal_sum(Q1, Q2))]
    h.check("example_inclusion_exclusion",
            parts == [16, 18, 8] and parts[0] + parts[1] - parts[2] == base, parts)


def run_colon(h: Harness, cases: int = COLON_CASES):
    rng = h.rng("colon")
    for _ in range(cases):
        h.tick()
        Q, last = random_irreducible(rng)
        for s in (2, 3, 4):
            lhs = colon_by_monomial(power(Q, s), last)
            h.check("colon_drops_power", lhs == power(Q, s - 1), lambda: f"Q={Q}, s={s}")


def run_irreducible_power(h: Harness, cases: int = IRREDUCIBLE_POWER_CASES):
    rng = h.rng("irreducible_power")
    for _ in range(cases):
        h.tick()
        Q, _ = random_irreducible(rng)
        exps = decompose.IrreducibleComponent.from_ideal(Q).exponents
        for s in (1, 2, 3, 4):
            closed = prod(exps) * formulas.power_binomial(len(exps), s)
            engine = h.mult(power(Q, s))
            h.check("irreducible_power_mult", closed == engine,
                    lambda: f"Q={Q}, s={s}: closed {closed}, engine {engine}")


def run_power_sum(h: Harness, cases: int = POWER_SUM_CASES):
    rng = h.rng("power_sum")
    for _ in range(cases):
        h.tick()
        I = random_monomial_ideal(rng)
        pd = decompose.primary_decomposition(I)
        h.check("decomposition_roundtrip", pd.intersection() == I, I)
        h.check("dim_matches_height", hilbert_summary(I).dim == I.n - pd.height, I)
        applicable = formulas.check_hypothesis(pd)
        for s in (1, 2, 3):
            engine = h.mult(power(I, s))
            comp = sum(h.mult(power(c.ideal, s)) for c in pd.min_height_components())
            h.check("component_sum", comp == engine,
                    lambda: f"I={I}, s={s}: components {comp}, engine {engine}")
            if applicable:
                closed = formulas.mult_power_closed(pd, s).value
                h.check("closed_form", closed == engine,
                        lambda: f"I={I}, s={s}: closed {closed}, engine {engine}")


def run_special(h: Harness, cases: int = SPECIAL_CASES):
    rng = h.rng("special")
    for _ in range(cases):
        h.tick()
        I = random_monomial_ideal(rng)
        J = random_monomial_ideal(rng, n=I.n)
        pd = decompose.primary_decomposition(I)
        applicable = formulas.check_hypothesis(pd)
        for m in (1, 2, 3):
            Im, Jm = special_power(I, m), special_power(J, m)
            case = lambda: f"I={I}, J={J}, m={m}"  # noqa: E731
            h.check("special_intersect", special_power(intersect(I, J), m) == intersect(Im, Jm), case)
            h.check("special_product", special_power(product(I, J), m) == product(Im, Jm), case)
            h.check("special_sum", special_power(ideal_sum(I, J), m) == ideal_sum(Im, Jm), case)
            h.check("special_irreducible",
                    decompose.is_irreducible(I) == decompose.is_irreducible(Im), case)
            h.check("special_primary", decompose.is_primary(I) == decompose.is_primary(Im), case)
            h.check("special_radical", radical(Im) == radical(I), case)
            pdm = decompose.primary_decomposition(Im)
            lifted = tuple(decompose.PrimaryComponent(special_power(c.ideal, m), c.support,
                                                      c.is_irreducible) for c in pd)
            h.check("special_decomposition", pdm.components == lifted, case)
            h.check("special_hypothesis_preserved",
                    formulas.check_hypothesis(pdm) == applicable, case)
            if not applicable:
                continue
            for s in (1, 2, 3):
                closed = formulas.mult_special_power_closed(pd, m, s).value
                engine = h.engine_mult(I, m, s)
                h.check("special_power_mult", closed == engine,
                        lambda: f"I={I}, m={m}, s={s}: closed {closed}, engine {engine}")


def run_squarefree(h: Harness, cases: int = SQUAREFREE_CASES):
    rng = h.rng("squarefree")
    for _ in range(cases):
        h.tick()
        I = random_squarefree(rng)
        pd = decompose.primary_decomposition(I)
        r, hgt = len(pd.min_height_components()), pd.height
        h.check("squarefree_base_mult", h.mult(I) == r, I)
        for m in (1, 2, 3):
            for s in (1, 2, 3):
                closed = formulas.mult_squarefree_closed(I, m, s)
                engine = h.engine_mult(I, m, s)
                h.check("squarefree_mult", closed == engine,
                        lambda: f"I={I}, m={m}, s={s}: closed {closed}, engine {engine}")
                h.check("squarefree_agrees_with_special",
                        closed == formulas.mult_special_power_closed(pd, m, s).value, I)
            h.check("squarefree_m1_reduction",
                    formulas.mult_squarefree_closed(I, 1, m) == r * formulas.power_binomial(hgt, m), I)


def graph_population(seed: int, max_vertices: int = GRAPH_MAX_VERTICES,
                     per_graph: int = GRAPH_ASSIGNMENTS_PER_GRAPH,
                     exhaustive_up_to: int = GRAPH_EXHAUSTIVE_VERTICES) -> list:
    """Weighted orientations of every connected graph on 2..max_vertices vertices.

    Up to ``exhaustive_up_to`` vertices every orientation appears once, each
    with a seeded weight vector; larger graphs get ``per_graph`` seeded
    orientation/weight draws.
    """
    rng = random.Random(f"{seed}:graphs")
    out = []
    for n in range(2, max_vertices + 1):
        for G in graphs.connected_graphs(n):
            edges = sorted(G.edges)
            if n <= exhaustive_up_to:
                for flips in itertools.product((False, True), repeat=len(edges)):
                    arcs = [(j, i) if f else (i, j) for (i, j), f in zip(edges, flips)]
                    weights = [rng.choice(GRAPH_WEIGHTS) for _ in range(n)]
                    out.append(graphs.WeightedOrientedGraph.build(n, arcs, weights))
            else:
                out.extend(random_orientation(rng, G) for _ in range(per_graph))
    return out


def check_oriented_graph(h: Harness, D: graphs.WeightedOrientedGraph, max_ms: int = 2):
    I = graphs.edge_ideal(D)
    case = lambda: f"arcs={sorted(D.arcs)}, weights={D.weights}"  # noqa: E731
    cpd = graphs.cover_primary_decomposition(D)
    h.check("graph_cover_roundtrip", cpd.intersection() == I, case)
    h.check("graph_cover_matches_decomposer", cpd == decompose.primary_decomposition(I), case)
    alpha, _, minimum = graphs.alpha_and_r(D.underlying)
    h.check("graph_height_is_alpha", cpd.height == alpha == decompose.height(I), case)
    h.check("graph_minimum_covers_no_l3",
            all(not graphs.cover_partition(D, c).l3 for c in minimum), case)
    for m in range(1, max_ms + 1):
        for s in range(1, max_ms + 1):
            closed = graphs.mult_oriented_closed(D, m, s)
            engine = h.engine_mult(I, m, s)
            h.check("oriented_mult", closed == engine,
                    lambda: f"{case()}, m={m}, s={s}: closed {closed}, engine {engine}")


def run_graphs(h: Harness, max_vertices: int = GRAPH_MAX_VERTICES,
               per_graph: int = GRAPH_ASSIGNMENTS_PER_GRAPH):
    for D in graph_population(h.seed, max_vertices, per_graph):
        h.tick()
        check_oriented_graph(h, D)
        flat = graphs.WeightedOrientedGraph.build(D.n, D.arcs)
        G = flat.underlying
        alpha, r, _ = graphs.alpha_and_r(G)
        h.check("graph_weight1_strong_is_minimal",
                graphs.strong_vertex_covers(flat) == graphs.minimal_vertex_covers(G),
                lambda: f"arcs={sorted(D.arcs)}")
        for s in (1, 2):
            h.check("graph_weight1_collapse",
                    graphs.mult_oriented_closed(flat, 1, s) == r * formulas.power_binomial(alpha, s)
                    == h.engine_mult(G.edge_ideal(), 1, s),
                    lambda: f"arcs={sorted(D.arcs)}, s={s}")


def run_bidirected(h: Harness, max_vertices: int = 4, per_graph: int = 10):
    """Graphs where some edges carry both orientations, each arc its own generator."""
    rng = h.rng("bidirected")
    for n in range(2, max_vertices + 1):
        for G in graphs.connected_graphs(n):
            for _ in range(per_graph):
                h.tick()
                arcs = []
                for i, j in sorted(G.edges):
                    roll = rng.random()
                    arcs += [(i, j)] if roll < 0.35 else [(j, i)] if roll < 0.7 else [(i, j), (j, i)]
                D = graphs.WeightedOrientedGraph.build(n, arcs, [rng.randint(1, 3) for _ in range(n)])
                I = graphs.edge_ideal(D)
                cpd = graphs.cover_primary_decomposition(D)
                case = lambda: f"arcs={sorted(D.arcs)}, weights={D.weights}"  # noqa: E731
                h.check("bidirected_cover_roundtrip", cpd.intersection() == I, case)
                h.check("bidirected_matches_decomposer",
                        cpd == decompose.primary_decomposition(I), case)
                h.check("bidirected_oriented_mult", all(
                    graphs.mult_oriented_closed(D, m, s) == h.engine_mult(I, m, s)
                    for m in (1, 2) for s in (1, 2)), case)


def run_oracle(h: Harness, max_degree: int = ORACLE_MAX_DEGREE):
    for (n, gens), J in sorted(h.touched.items()):
        try:
            counts = standard_monomial_counts(J, max_degree)
        except ResourceLimitError:
            # Too many monomials to enumerate; counted, not silently passed.
            h.oracle_skipped += 1
            continue
        K = k_polynomial(J)
        series = [K.series_coefficient(k, J.n) for k in range(max_degree + 1)]
        h.check("hilbert_oracle", series == counts, lambda: f"I={J}")


RUNNERS = {
    "example": run_example,
    "colon": run_colon,
    "irreducible_power": run_irreducible_power,
    "power_sum": run_power_sum,
    "special": run_special,
    "squarefree": run_squarefree,
    "graphs": run_graphs,
    "bidirected": run_bidirected,
}


def run_verify(scope: str = "all", seed: int = 0, budget: float | None = None) -> VerifyReport:
    """Run one scope (or ``all``) and return per-law pass/fail counts."""
    if scope != "all" and scope not in RUNNERS:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)} or all")
    harness = Harness(seed, budget)
    report = VerifyReport(scope, seed)
    start = time.monotonic()
    try:
        for name in (SCOPES if scope == "all" else (scope,)):
            t0 = time.monotonic()
            RUNNERS[name](harness)
            report.scope_seconds[name] = time.monotonic() - t0
        harness.tick()
        t0 = time.monotonic()
        run_oracle(harness)
        report.scope_seconds["oracle"] = time.monotonic() - t0
    except BudgetExhausted:
        report.budget_exhausted = True
    except HypothesisViolatedError as exc:  # pragma: no cover - would be a harness bug
        harness.check("harness_internal", False, str(exc))
    report.laws = list(harness.laws.values())
    report.touched = len(harness.touched)
    report.oracle_skipped = harness.oracle_skipped
    report.elapsed = time.monotonic() - start
    return report
