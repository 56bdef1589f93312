"""Hypothesis strategies and brute-force helpers shared by the test modules."""

from itertools import combinations_with_replacement, product

from hypothesis import strategies as st

from monomult.ideal import MonomialIdeal, divides


@st.composite
def monomials(draw, n, max_exp=3, nonconstant=True):
    u = draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n))
    if nonconstant and not any(u):
        u[draw(st.integers(0, n - 1))] = 1
    return tuple(u)


@st.composite
def ideals(draw, n=None, max_n=4, max_gens=4, max_exp=3):
    if n is None:
        n = draw(st.integers(1, max_n))
    gens = draw(st.lists(monomials(n, max_exp), min_size=1, max_size=max_gens))
    return MonomialIdeal.from_generators(n, gens)


@st.composite
def ideal_pairs(draw, max_n=3, max_gens=3, max_exp=3):
    n = draw(st.integers(1, max_n))
    return (draw(ideals(n=n, max_gens=max_gens, max_exp=max_exp)),
            draw(ideals(n=n, max_gens=max_gens, max_exp=max_exp)))


def box(n, bound):
    """All exponent vectors with entries <= bound."""
    return product(range(bound + 1), repeat=n)


def in_power_bruteforce(gens, s, u):
    """u in (gens)^s, checked over all s-fold products of raw generators."""
    for combo in combinations_with_replacement(gens, s):
        prod_ = tuple(map(sum, zip(*combo)))
        if divides(prod_, u):
            return True
    return False


def same_membership(I, J, bound):
    return all((u in I) == (u in J) for u in box(I.n, bound))
