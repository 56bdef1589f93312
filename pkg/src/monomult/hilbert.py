"""Hilbert series of R/I for a monomial ideal I, plus brute-force counters.

The numerator K(t) of HS(R/I, t) = K(t) / (1 - t)^n comes from the pivot
recursion

    K(I) = K(I + (p)) + t^deg(p) * K(I : p)

which is the additivity of Hilbert series on
0 -> R/(I:p)(-deg p) -> R/I -> R/(I + p) -> 0. Cancelling the factors
(1 - t) gives the reduced numerator Q(t), the Krull dimension, the
multiplicity Q(1) and the Hilbert coefficients e_i = Q^(i)(1) / i!.

The brute-force counters never touch the recursion: they enumerate exponent
vectors degree by degree and test membership directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

import numpy as np

from .errors import DegenerateInputError, MalformedInputError, ResourceLimitError
from .ideal import MonomialIdeal, _antichain, divides, is_pure_power, mono_colon

DEFAULT_ENUMERATION_CAP = 5_000_000


class IntegerPolynomial:
    """Dense univariate polynomial with unbounded integer coefficients.

    ``coeffs[k]`` is the coefficient of t^k; the highest stored coefficient is
    nonzero, and the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "IntegerPolynomial":
        return cls((0,) * k + (coeff,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc

    def __eq__(self, other):
        if isinstance(other, IntegerPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == IntegerPolynomial(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntegerPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self):
        return IntegerPolynomial([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerPolynomial([a * other for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntegerPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntegerPolynomial":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return IntegerPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> "IntegerPolynomial":
        return IntegerPolynomial([k * a for k, a in enumerate(self.coeffs)][1:])

    def divide_one_minus_t(self):
        """Return ``P / (1 - t)`` if the division is exact, else ``None``."""
        if not self.coeffs:
            return None
        partial, acc = [], 0
        for a in self.coeffs:
            acc += a
            partial.append(acc)
        if partial[-1] != 0:
            return None
        return IntegerPolynomial(partial[:-1])

    def series_coefficient(self, k: int, n: int) -> int:
        """Coefficient of t^k in self(t) / (1 - t)^n."""
        if n == 0:
            return self.coeffs[k] if k < len(self.coeffs) else 0
        return sum(a * comb(k - j + n - 1, n - 1)
                   for j, a in enumerate(self.coeffs[:k + 1]))

    def __repr__(self):
        return f"IntegerPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            mag = abs(a)
            body = "t" if k == 1 else (f"t^{k}" if k else "")
            if k and mag == 1:
                term = body
            else:
                term = f"{mag}{'*' + body if body else ''}"
            terms.append(("-" if a < 0 else "+", term))
        sign, first = terms[0]
        out = ("-" if sign == "-" else "") + first
        for sign, term in terms[1:]:
            out += f" {sign} {term}"
        return out


_ONE = IntegerPolynomial((1,))
_ZERO = IntegerPolynomial()


# -- K-polynomial recursion ---------------------------------------------------

def _variable_blocks(gens):
    """Split generators into classes connected by shared variables."""
    blocks = []  # list of (variable set, generator list)
    for g in gens:
        vs = {i for i, e in enumerate(g) if e}
        merged_vars, merged_gens, rest = set(vs), [g], []
        for bv, bg in blocks:
            if bv & vs:
                merged_vars |= bv
                merged_gens.extend(bg)
            else:
                rest.append((bv, bg))
        rest.append((merged_vars, merged_gens))
        blocks = rest
    return [tuple(sorted(bg)) for _, bg in blocks]


def _choose_pivot(gens):
    # Highest-degree generator that is not a pure power (one exists whenever
    # the generators are not pairwise coprime), then its largest exponent.
    best = max((g for g in gens if not is_pure_power(g)), key=lambda g: (sum(g), g))
    i = max(range(len(best)), key=lambda j: (best[j], -j))
    return i, best[i]


@lru_cache(maxsize=1 << 16)
def _kpoly(gens: tuple) -> IntegerPolynomial:
    if not gens:
        return _ONE
    if any(not any(g) for g in gens):
        return _ZERO
    blocks = _variable_blocks(gens)
    if len(blocks) > 1:
        result = _ONE
        for block in blocks:
            result = result * _kpoly(block)
        return result
    if len(gens) == 1:
        return _ONE - IntegerPolynomial.monomial(sum(gens[0]))
    i, e = _choose_pivot(gens)
    pivot = tuple(e if j == i else 0 for j in range(len(gens[0])))
    with_pivot = _antichain(gens + (pivot,))
    quotient = _antichain(mono_colon(g, pivot) for g in gens)
    return _kpoly(with_pivot) + _kpoly(quotient).shift(e)


def k_polynomial(I: MonomialIdeal) -> IntegerPolynomial:
    """Numerator of HS(R/I, t) over (1 - t)^n."""
    return _kpoly(I.gens)


def clear_cache() -> None:
    _kpoly.cache_clear()


# -- summaries ----------------------------------------------------------------

@dataclass(frozen=True)
class HilbertSummary:
    n: int
    k_poly: IntegerPolynomial
    dim: int
    q_poly: IntegerPolynomial
    mult: int
    hilbert_coeffs: tuple

    def series_coefficient(self, k: int) -> int:
        """H(R/I, k), read off the rational form."""
        return self.q_poly.series_coefficient(k, self.dim)


def hilbert_summary(I: MonomialIdeal) -> HilbertSummary:
    if I.is_unit:
        raise DegenerateInputError("R/I is zero for the unit ideal")
    k_poly = k_polynomial(I)
    q_poly, divisions = k_poly, 0
    while True:
        nxt = q_poly.divide_one_minus_t()
        if nxt is None:
            break
        q_poly, divisions = nxt, divisions + 1
    dim = I.n - divisions
    mult = q_poly(1)
    coeffs = []
    deriv, fact = q_poly, 1
    for i in range(max(dim, 1)):
        if i:
            deriv = deriv.derivative()
            fact *= i
        coeffs.append(deriv(1) // fact)
    return HilbertSummary(I.n, k_poly, dim, q_poly, mult, tuple(coeffs))


def multiplicity(I: MonomialIdeal) -> int:
    return hilbert_summary(I).mult


class RationalPolynomial:
    """Polynomial in k with Fraction coefficients (``coeffs[j]`` multiplies k^j)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, k):
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * k + a
        return acc

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RationalPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            return RationalPolynomial([a * other for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RationalPolynomial(out)

    def __eq__(self, other):
        return isinstance(other, RationalPolynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"


def _binomial_in_k(shift: int, r: int) -> RationalPolynomial:
    """C(k + shift, r) as a polynomial in k."""
    poly = RationalPolynomial([1])
    for j in range(r):
        poly = poly * RationalPolynomial([shift - j, 1])
    return poly * Fraction(1, factorial(r))


def hilbert_polynomial(summary: HilbertSummary) -> RationalPolynomial:
    """p(k) = sum_i (-1)^i e_i C(k + d - i, d - i) with d = dim - 1.

    Zero polynomial when dim = 0.
    """
    d = summary.dim - 1
    result = RationalPolynomial()
    if d < 0:
        return result
    for i in range(d + 1):
        term = _binomial_in_k(d - i, d - i) * ((-1) ** i * summary.hilbert_coeffs[i])
        result = result + term
    return result


# -- brute force ----------------------------------------------------------------

def _compositions(k: int, n: int):
    """All exponent vectors of length n and total degree k (stars and bars)."""
    if n == 0:
        if k == 0:
            yield ()
        return
    for bars in combinations(range(k + n - 1), n - 1):
        prev, vec = -1, []
        for b in bars:
            vec.append(b - prev - 1)
            prev = b
        vec.append(k + n - 1 - prev - 1)
        yield tuple(vec)


def hilbert_function_bruteforce(I: MonomialIdeal, k: int,
                                cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Number of degree-k monomials outside I, by direct enumeration."""
    if k < 0:
        raise MalformedInputError("degree must be >= 0")
    total = comb(k + I.n - 1, k) if I.n else int(k == 0)
    if total > cap:
        raise ResourceLimitError(
            f"{total} exponent vectors of degree {k} exceed the enumeration cap {cap}")
    gens = I.gens
    return sum(1 for u in _compositions(k, I.n) if not any(divides(g, u) for g in gens))


def standard_monomial_counts(I: MonomialIdeal, max_degree: int,
                             cap: int = DEFAULT_ENUMERATION_CAP) -> list:
    """[H(R/I, 0), ..., H(R/I, max_degree)] by vectorized enumeration.

    Same brute-force principle as :func:`hilbert_function_bruteforce`, checking
    all degrees at once.
    """
    n = I.n
    total = comb(max_degree + n, n)
    if total > cap:
        raise ResourceLimitError(
            f"{total} exponent vectors up to degree {max_degree} exceed the cap {cap}")
    if n == 0:
        return [0 if I.is_unit else 1] + [0] * max_degree
    vecs = np.zeros((1, 0), dtype=np.int64)
    for _ in range(n):
        room = max_degree - vecs.sum(axis=1)
        vecs = np.concatenate([
            np.column_stack([vecs[room >= e], np.full(int((room >= e).sum()), e)])
            for e in range(max_degree + 1)
        ])
    inside = np.zeros(len(vecs), dtype=bool)
    if I.gens:
        # Exponents above max_degree can never divide; clipping keeps int64 safe.
        gens = np.minimum(np.array(I.gens, dtype=object), max_degree + 1).astype(np.int64)
        for g in gens:
            inside |= np.all(vecs >= g, axis=1)
    degs = vecs.sum(axis=1)
    return np.bincount(degs[~inside], minlength=max_degree + 1).astype(int).tolist()
