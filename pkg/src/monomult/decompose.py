"""Irreducible and primary decompositions of monomial ideals.

Irreducible decomposition uses the splitting rule: if a minimal generator
factors as u = v * w with v, w coprime and nontrivial, then
I = (G - {u}, v) ∩ (G - {u}, w). Leaves are generated by pure powers.
Grouping the irredundant leaves by support and intersecting each group gives
an irredundant reduced primary decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateInputError
from .ideal import (
    MonomialIdeal,
    _antichain,
    contains,
    intersect_all,
    is_pure_power,
    variable,
)


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal (x_i^a_i : i in assignments), stored as sorted (index, exponent) pairs."""

    n: int
    assignments: tuple

    def __post_init__(self):
        if not self.assignments:
            raise DegenerateInputError("irreducible component needs at least one variable")
        if any(a < 1 for _, a in self.assignments):
            raise DegenerateInputError("irreducible exponents must be >= 1")

    @classmethod
    def from_ideal(cls, Q: MonomialIdeal) -> "IrreducibleComponent":
        if not is_irreducible(Q):
            raise DegenerateInputError(f"{Q} is not generated by pure powers")
        pairs = []
        for g in Q.gens:
            i = next(j for j, e in enumerate(g) if e)
            pairs.append((i, g[i]))
        return cls(Q.n, tuple(sorted(pairs)))

    @property
    def height(self) -> int:
        return len(self.assignments)

    @property
    def support(self) -> tuple:
        return tuple(i for i, _ in self.assignments)

    @property
    def exponents(self) -> tuple:
        return tuple(a for _, a in self.assignments)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_generators(
            self.n, [variable(self.n, i, a) for i, a in self.assignments])

    def contains_component(self, other: "IrreducibleComponent") -> bool:
        """self ⊇ other as ideals."""
        mine = dict(self.assignments)
        return all(i in mine and mine[i] <= a for i, a in other.assignments)


@dataclass(frozen=True)
class PrimaryComponent:
    ideal: MonomialIdeal
    support: tuple
    is_irreducible: bool

    @property
    def height(self) -> int:
        return len(self.support)

    def sort_key(self):
        return (self.height, self.support, self.ideal.gens)


@dataclass(frozen=True)
class PrimaryDecomposition:
    n: int
    components: tuple

    @property
    def heights(self) -> tuple:
        return tuple(c.height for c in self.components)

    @property
    def height(self) -> int:
        return min(self.heights)

    def min_height_components(self) -> tuple:
        h = self.height
        return tuple(c for c in self.components if c.height == h)

    def intersection(self) -> MonomialIdeal:
        return intersect_all([c.ideal for c in self.components], self.n)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def is_irreducible(I: MonomialIdeal) -> bool:
    """True iff I is proper, nonzero and every minimal generator is a pure power."""
    if I.is_zero or I.is_unit:
        return False
    return all(is_pure_power(g) for g in I.gens)


def _require_proper_nonzero(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise DegenerateInputError("the zero ideal has no monomial decomposition")
    if I.is_unit:
        raise DegenerateInputError("the unit ideal has no primary decomposition")


def _split_leaves(gens: tuple) -> set:
    leaves, seen, stack = set(), set(), [gens]
    while stack:
        current = stack.pop()
        if current in seen:
            continue
        seen.add(current)
        u = next((g for g in current if not is_pure_power(g)), None)
        if u is None:
            leaves.add(current)
            continue
        i = next(j for j, e in enumerate(u) if e)
        v = tuple(u[i] if j == i else 0 for j in range(len(u)))
        w = tuple(0 if j == i else e for j, e in enumerate(u))
        rest = tuple(g for g in current if g != u)
        stack.append(_antichain(rest + (w,)))
        stack.append(_antichain(rest + (v,)))
    return leaves


def irreducible_decomposition(I: MonomialIdeal) -> list:
    """Irredundant irreducible components of I in canonical order."""
    _require_proper_nonzero(I)
    comps = {IrreducibleComponent.from_ideal(MonomialIdeal(I.n, leaf))
             for leaf in _split_leaves(I.gens)}
    # For irreducible monomial ideals, Q ⊇ ∩ others iff Q ⊇ some other leaf.
    kept = [q for q in comps
            if not any(p != q and q.contains_component(p) for p in comps)]
    return sorted(kept, key=lambda q: (q.height, q.support, q.exponents))


def _drop_redundant(components: list, n: int) -> list:
    kept = list(components)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        if others:
            meet = intersect_all([c.ideal for c in others], n)
            if all(contains(kept[i].ideal, g) for g in meet.gens):
                del kept[i]
                continue
        i += 1
    return kept


def primary_decomposition(I: MonomialIdeal) -> PrimaryDecomposition:
    """Irredundant reduced primary decomposition, one component per associated prime."""
    _require_proper_nonzero(I)
    groups = {}
    for q in irreducible_decomposition(I):
        groups.setdefault(q.support, []).append(q)
    components = []
    for sup, members in groups.items():
        ideal = intersect_all([q.ideal() for q in members], I.n)
        components.append(PrimaryComponent(ideal, sup, len(members) == 1))
    components = _drop_redundant(sorted(components, key=PrimaryComponent.sort_key), I.n)
    return PrimaryDecomposition(I.n, tuple(components))


def height(I: MonomialIdeal) -> int:
    return primary_decomposition(I).height


def min_height_components(pd: PrimaryDecomposition) -> tuple:
    return pd.min_height_components()


def is_primary(I: MonomialIdeal) -> bool:
    if I.is_zero or I.is_unit:
        return False
    return len(primary_decomposition(I)) == 1
