"""Monomials and monomial ideals.

A monomial is a tuple of nonnegative ints (its exponent vector); the ambient
variable count ``n`` is the tuple length. A :class:`MonomialIdeal` stores its
minimal generating set G(I) in lexicographic order, so two ideals are equal
exactly when their dataclass fields are equal.

Conventions: the zero ideal has no generators, the unit ideal has the single
generator ``(0, ..., 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterable, Sequence

from .errors import MalformedInputError, ResourceLimitError

Monomial = tuple  # tuple[int, ...]

DEFAULT_GENERATOR_CAP = 200_000


# -- monomial arithmetic -----------------------------------------------------

def monomial(exponents: Iterable[int]) -> Monomial:
    mono = tuple(int(e) for e in exponents)
    if any(e < 0 for e in mono):
        raise MalformedInputError(f"negative exponent in {mono}")
    return mono


def one(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int, exponent: int = 1) -> Monomial:
    """The pure power x_{i+1}^exponent (``i`` is 0-based)."""
    if not 0 <= i < n:
        raise MalformedInputError(f"variable index {i} out of range for n={n}")
    return tuple(exponent if j == i else 0 for j in range(n))


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> tuple:
    return tuple(i for i, e in enumerate(u) if e)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a > b else b for a, b in zip(u, v))


def mono_gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a < b else b for a, b in zip(u, v))


def mono_colon(u: Monomial, v: Monomial) -> Monomial:
    """u / gcd(u, v)."""
    return tuple(a - b if a > b else 0 for a, b in zip(u, v))


def mono_pow(u: Monomial, m: int) -> Monomial:
    return tuple(a * m for a in u)


def is_pure_power(u: Monomial) -> bool:
    return sum(1 for e in u if e) == 1


def squarefree_part(u: Monomial) -> Monomial:
    return tuple(1 if e else 0 for e in u)


def format_monomial(u: Monomial, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = [f"x{i + 1}" for i in range(len(u))]
    factors = []
    for name, e in zip(names, u):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


# -- ideals ------------------------------------------------------------------

def _check_lengths(n: int, monos: Iterable[Monomial]) -> list:
    out = []
    for u in monos:
        u = tuple(u)
        if len(u) != n:
            raise MalformedInputError(
                f"monomial {u} has {len(u)} exponents, expected {n}")
        if any((not isinstance(e, int)) or e < 0 for e in u):
            raise MalformedInputError(f"invalid exponents in {u}")
        out.append(u)
    return out


def _antichain(monos: Iterable[Monomial]) -> tuple:
    # Anything divisible by a kept generator has degree >= that generator.
    kept = []
    for u in sorted(set(monos), key=lambda m: (sum(m), m)):
        if not any(divides(g, u) for g in kept):
            kept.append(u)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in n variables given by its minimal generators."""

    n: int
    gens: tuple

    def __post_init__(self):
        if self.n < 0:
            raise MalformedInputError("ambient variable count must be >= 0")

    @classmethod
    def from_generators(cls, n: int, raw: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return minimize(raw, n)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (one(n),))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def __contains__(self, u) -> bool:
        return contains(self, u)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __pow__(self, s):
        return power(self, s)

    def issubset(self, other: "MonomialIdeal") -> bool:
        """I ⊆ J, decided on generators."""
        _same_ring(self, other)
        return all(contains(other, g) for g in self.gens)

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, names) for g in self.gens) + ")"

    def __str__(self):
        return self.to_string()


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise MalformedInputError(f"ambient counts differ: {I.n} != {J.n}")


def minimize(raw: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    """Reduce a generating set to G(I), sorted lexicographically."""
    return MonomialIdeal(n, _antichain(_check_lengths(n, raw)))


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    u = tuple(u)
    if len(u) != I.n:
        raise MalformedInputError(f"monomial {u} does not live in {I.n} variables")
    return any(divides(g, u) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n, _antichain(I.gens + J.gens))


def product(I: MonomialIdeal, J: MonomialIdeal,
            max_generators: int = DEFAULT_GENERATOR_CAP) -> MonomialIdeal:
    _same_ring(I, J)
    if len(I.gens) * len(J.gens) > max_generators:
        raise ResourceLimitError(
            f"product would form {len(I.gens) * len(J.gens)} generators "
            f"(cap {max_generators})")
    return MonomialIdeal(I.n, _antichain(mono_mul(u, v) for u, v in _cartesian(I.gens, J.gens)))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n, _antichain(mono_lcm(u, v) for u, v in _cartesian(I.gens, J.gens)))


def intersect_all(ideals: Sequence[MonomialIdeal], n: int | None = None) -> MonomialIdeal:
    """Intersection of a nonempty family; the empty family gives the unit ideal of ``n``."""
    if not ideals:
        if n is None:
            raise MalformedInputError("empty intersection needs an ambient count")
        return MonomialIdeal.unit(n)
    # Smallest first keeps intermediate generator sets down.
    ordered = sorted(ideals, key=lambda q: len(q.gens))
    result = ordered[0]
    for q in ordered[1:]:
        result = intersect(result, q)
    return result


def power(I: MonomialIdeal, s: int,
          max_generators: int = DEFAULT_GENERATOR_CAP) -> MonomialIdeal:
    """I^s by iterated multiplication, re-minimizing after every step.

    ``s = 0`` returns the unit ideal.
    """
    if s < 0:
        raise MalformedInputError("power exponent must be >= 0")
    if s == 0:
        return MonomialIdeal.unit(I.n)
    result = I
    for _ in range(s - 1):
        result = product(result, I, max_generators)
    return result


def special_power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """The ideal generated by the m-th powers of the minimal generators.

    Already minimal: u^m | v^m iff u | v.
    """
    if m < 1:
        raise MalformedInputError("special power exponent must be >= 1")
    return MonomialIdeal(I.n, tuple(sorted(mono_pow(g, m) for g in I.gens)))


def colon_by_monomial(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    u = tuple(u)
    if len(u) != I.n:
        raise MalformedInputError(f"monomial {u} does not live in {I.n} variables")
    return MonomialIdeal(I.n, _antichain(mono_colon(g, u) for g in I.gens))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.n, _antichain(squarefree_part(g) for g in I.gens))
