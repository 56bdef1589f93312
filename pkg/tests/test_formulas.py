from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monomult.decompose import primary_decomposition
from monomult.errors import HypothesisViolatedError, MalformedInputError, NotSquareFreeError
from monomult.formulas import (
    CLOSED_FORM,
    COMPONENT_SUM,
    ENGINE_FALLBACK,
    check_hypothesis,
    compute_mult,
    engine_mult,
    mult_power_closed,
    mult_power_components,
    mult_special_power_closed,
    mult_squarefree_closed,
    power_binomial,
)
from monomult.hilbert import multiplicity
from monomult.ideal import MonomialIdeal, power, special_power
from strategies import ideals


def M(n, *gens):
    return MonomialIdeal.from_generators(n, gens)


EXAMPLE = M(3, (0, 3, 0), (3, 0, 0), (0, 2, 2), (2, 0, 2), (0, 0, 4))
Q1 = M(3, (2, 0, 0), (0, 2, 0), (0, 0, 4))
XY = M(2, (1, 1))
PATH = M(3, (1, 2, 0), (0, 1, 1))


def pd(I):
    return primary_decomposition(I)


class TestHypothesis:
    def test_cases(self):
        assert check_hypothesis(pd(XY))
        assert not check_hypothesis(pd(EXAMPLE))
        assert check_hypothesis(pd(PATH))


class TestComponentSum:
    @pytest.mark.parametrize("s, expected", [(1, 26), (2, 112), (3, 294), (4, 608)])
    def test_example(self, s, expected):
        assert mult_power_components(pd(EXAMPLE), s) == expected

    def test_principal(self):
        assert mult_power_components(pd(XY), 3) == 6 == multiplicity(M(2, (3, 3)))


class TestClosed:
    def test_irreducible(self):
        report = mult_power_closed(pd(Q1), 2)
        assert (report.h, report.r, report.base_mult, report.value) == (3, 1, 16, 64)
        assert report.method == CLOSED_FORM
        assert multiplicity(power(Q1, 2)) == 64

    @pytest.mark.parametrize("s", [1, 2, 3, 4, 5])
    def test_principal_squarefree(self, s):
        assert mult_power_closed(pd(XY), s).value == 2 * s == multiplicity(M(2, (s, s)))

    def test_example_rejected(self):
        with pytest.raises(HypothesisViolatedError):
            mult_power_closed(pd(EXAMPLE), 2)
        with pytest.raises(HypothesisViolatedError):
            mult_special_power_closed(pd(EXAMPLE), 2, 1)

    def test_naive_formula_wrong_on_example(self):
        naive = [26 * power_binomial(3, s) for s in (2, 3, 4)]
        assert naive == [104, 260, 520]
        assert naive != [multiplicity(power(EXAMPLE, s)) for s in (2, 3, 4)]

    def test_special_power(self):
        assert mult_special_power_closed(pd(XY), 3, 1).value == 6 == multiplicity(M(2, (3, 3)))
        assert mult_special_power_closed(pd(Q1), 2, 1).value == 128
        assert multiplicity(M(3, (4, 0, 0), (0, 4, 0), (0, 0, 8))) == 128
        for s in (1, 2, 3):
            assert mult_special_power_closed(pd(PATH), 1, s) == mult_power_closed(pd(PATH), s)

    def test_squarefree(self):
        assert mult_squarefree_closed(XY, 1, 1) == 2
        assert mult_squarefree_closed(XY, 2, 3) == 12
        assert multiplicity(power(M(2, (2, 2)), 3)) == 12
        with pytest.raises(NotSquareFreeError):
            mult_squarefree_closed(PATH, 1, 1)

    def test_bad_exponents(self):
        with pytest.raises(MalformedInputError):
            mult_power_closed(pd(XY), 0)
        with pytest.raises(MalformedInputError):
            mult_special_power_closed(pd(XY), 0, 1)


class TestDispatch:
    def test_methods(self):
        closed = compute_mult(PATH, 2, 2, "closed")
        comps = compute_mult(PATH, 2, 2, "components")
        engine = compute_mult(PATH, 2, 2, "engine")
        assert closed.value == comps.value == engine.value
        assert (comps.method, engine.method) == (COMPONENT_SUM, ENGINE_FALLBACK)

    def test_example_fallback(self):
        with pytest.raises(HypothesisViolatedError):
            compute_mult(EXAMPLE, 1, 2, "closed")
        report = compute_mult(EXAMPLE, 1, 2, "engine")
        assert (report.value, report.base_mult, report.applicable) == (112, 26, False)
        assert compute_mult(EXAMPLE, 1, 3, "components").value == 294

    def test_unknown_method(self):
        with pytest.raises(MalformedInputError):
            compute_mult(XY, 1, 1, "guess")


def test_binomial_pascal_step():
    for m in range(1, 8):
        for s in range(2, 8):
            assert comb(m + s - 2, s - 2) + comb(m + s - 2, s - 1) == comb(m + s - 1, s - 1)


@settings(max_examples=50, deadline=None)
@given(ideals(max_n=4, max_gens=4), st.integers(1, 3))
def test_component_sum_matches_engine(I, s):
    assert mult_power_components(pd(I), s) == multiplicity(power(I, s))


@settings(max_examples=50, deadline=None)
@given(ideals(max_n=4, max_gens=4), st.integers(1, 3), st.integers(1, 3))
def test_closed_forms_match_engine(I, m, s):
    d = pd(I)
    if not check_hypothesis(d):
        with pytest.raises(HypothesisViolatedError):
            mult_power_closed(d, s)
        return
    assert mult_power_closed(d, s).value == multiplicity(power(I, s))
    assert mult_special_power_closed(d, m, s).value == engine_mult(I, m, s)
    assert check_hypothesis(pd(special_power(I, m)))


@settings(max_examples=40, deadline=None)
@given(ideals(max_n=5, max_gens=5, max_exp=1), st.integers(1, 3), st.integers(1, 3))
def test_squarefree_matches_engine(I, m, s):
    assert mult_squarefree_closed(I, m, s) == engine_mult(I, m, s)
