import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monomult.errors import ParseError
from monomult.ideal import MonomialIdeal, intersect
from monomult.parsing import (
    GraphSpec,
    IdealSpec,
    format_graph_spec,
    format_ideal_spec,
    parse_graph_spec,
    parse_ideal_spec,
)

EXAMPLE_TEXT = """\
# the two irreducible components
ring x1 x2 x3
ideal Q1 = x1^2, x2^2, x3^4
ideal Q2 = x1^3 , x2^3,x3^2   # spacing is free
"""


class TestIdealSpec:
    def test_basic(self):
        spec = parse_ideal_spec("ring x1 x2 x3\nideal I = x1^2, x2^2, x3^4")
        assert spec.variables == ("x1", "x2", "x3")
        assert spec.ideals == {"I": ((2, 0, 0), (0, 2, 0), (0, 0, 4))}

    def test_example_components(self):
        spec = parse_ideal_spec(EXAMPLE_TEXT)
        assert spec.ideals["Q1"] == ((2, 0, 0), (0, 2, 0), (0, 0, 4))
        assert spec.ideals["Q2"] == ((3, 0, 0), (0, 3, 0), (0, 0, 2))
        I = intersect(spec.ideal("Q1"), spec.ideal("Q2"))
        assert set(I.gens) == {(0, 3, 0), (3, 0, 0), (0, 2, 2), (2, 0, 2), (0, 0, 4)}

    def test_products_and_constant(self):
        spec = parse_ideal_spec("ring a b\nideal J = a*b^3, 1, a * a ^ 2")
        assert spec.ideals["J"] == ((1, 3), (0, 0), (3, 0))
        assert spec.ideal("J") == MonomialIdeal.unit(2)

    def test_big_exponent(self):
        spec = parse_ideal_spec("ring x\nideal I = x^123456789012345678901234567890")
        assert spec.ideals["I"] == ((123456789012345678901234567890,),)

    @pytest.mark.parametrize("text, fragment", [
        ("ideal I = x1", "before the ring"),
        ("ring x1\nideal I = x2", "undeclared variable 'x2'"),
        ("ring x1 x1", "duplicate variable"),
        ("ring x1\nideal I = x1^", "expected exponent"),
        ("ring x1\nideal I = x1 x1", "unexpected 'x1'"),
        ("ring x1\nideal I = 2", "constant 1"),
        ("ring x1\nideal I = x1\nideal I = x1", "duplicate ideal"),
        ("ring x1\nideal I = x1 $", "unexpected character '$'"),
        ("ring x1\nideal I = x1^" + "9" * 70, "more than"),
        ("", "missing ring"),
        ("ring x1\nideal I =", "expected variable or 1"),
    ])
    def test_errors(self, text, fragment):
        with pytest.raises(ParseError) as err:
            parse_ideal_spec(text)
        assert fragment in str(err.value)

    def test_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_ideal_spec("ring x1 x2\nideal I = x1, x3")
        assert (err.value.line, err.value.column) == (2, 15)

    def test_unknown_name(self):
        with pytest.raises(ParseError):
            parse_ideal_spec(EXAMPLE_TEXT).ideal("Q3")


class TestGraphSpec:
    def test_basic(self):
        spec = parse_graph_spec("vertices: x1 x2:2\narcs: x1->x2")
        assert spec.vertices == ("x1", "x2") and spec.weights == (1, 2)
        assert spec.arcs == (("x1", "x2"),)
        D = spec.to_graph()
        assert D.arcs == frozenset({(0, 1)}) and D.weights == (1, 2)

    def test_path(self):
        spec = parse_graph_spec("vertices: x1 x2:2 x3:1\narcs: x1 -> x2  x2->x3")
        D = spec.to_graph()
        assert D.weights == (1, 2, 1) and D.arcs == frozenset({(0, 1), (1, 2)})

    @pytest.mark.parametrize("text, fragment", [
        ("arcs: x1->x1", "self-arc"),
        ("vertices: a b\narcs: a->c", "undeclared vertex 'c'"),
        ("vertices: a b:0", "weights must be >= 1"),
        ("vertices: a a", "duplicate vertex"),
        ("vertices: a b\narcs: a->b a->b", "duplicate arc"),
        ("vertices: a b\narcs: a-b", "unexpected character"),
        ("edges: a->b", "expected 'vertices' or 'arcs'"),
        ("arcs: a->b", "missing vertices"),
    ])
    def test_errors(self, text, fragment):
        with pytest.raises(ParseError) as err:
            parse_graph_spec(text)
        assert fragment in str(err.value)


names = st.from_regex(r"[a-z][a-z0-9]{0,3}", fullmatch=True).filter(
    lambda s: s not in {"ring", "ideal"})


@st.composite
def ideal_specs(draw):
    variables = tuple(draw(st.lists(names, min_size=1, max_size=4, unique=True)))
    n = len(variables)
    ideals = {}
    for name in draw(st.lists(st.from_regex(r"[A-Z][a-z0-9]{0,2}", fullmatch=True),
                              min_size=1, max_size=3, unique=True)):
        gens = draw(st.lists(st.tuples(*[st.integers(0, 12)] * n), min_size=1, max_size=4))
        ideals[name] = tuple(gens)
    return IdealSpec(variables, ideals)


@st.composite
def graph_specs(draw):
    vertices = tuple(draw(st.lists(names, min_size=2, max_size=5, unique=True)))
    weights = tuple(draw(st.lists(st.integers(1, 9), min_size=len(vertices), max_size=len(vertices))))
    pairs = [(a, b) for a in vertices for b in vertices if a != b]
    arcs = tuple(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=6)))
    return GraphSpec(vertices, weights, arcs)


@settings(max_examples=100)
@given(ideal_specs())
def test_ideal_round_trip(spec):
    assert parse_ideal_spec(format_ideal_spec(spec)) == spec


@settings(max_examples=100)
@given(graph_specs())
def test_graph_round_trip(spec):
    assert parse_graph_spec(format_graph_spec(spec)) == spec
