"""Weighted oriented graphs, vertex covers and their edge ideals.

Vertices are 0-based indices; vertex ``i`` is the variable x_{i+1}. An arc
(i, j) contributes the generator x_i * x_j^w(j) to the edge ideal I(D).

For a vertex cover C of the underlying graph:

* L1(C): vertices of C with an out-arc leaving C,
* L3(C): vertices of C whose whole neighbourhood lies in C,
* L2(C): the rest of C.

C is *strong* when it is a minimal cover, or every L3 vertex receives an arc
from an L2 ∪ L3 vertex of weight >= 2. I(D) is the intersection over strong
covers C of I_C = (L1(C), x_j^w(j) for j in L2(C) ∪ L3(C)).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, prod

from .decompose import PrimaryComponent, PrimaryDecomposition
from .errors import MalformedInputError, NotACoverError, ResourceLimitError
from .ideal import MonomialIdeal, variable

DEFAULT_VERTEX_CAP = 20
BRUTEFORCE_VERTEX_CAP = 15


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset  # of (i, j) with i < j

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise MalformedInputError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise MalformedInputError(f"edge {e} out of range for n={self.n}")
            clean.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n, edges):
        return cls(n, frozenset(tuple(e) for e in edges))

    def neighbors(self, v: int) -> frozenset:
        return frozenset(j if i == v else i for i, j in self.edges if v in (i, j))

    def adjacency(self) -> list:
        adj = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return [frozenset(a) for a in adj]

    def is_vertex_cover(self, cover) -> bool:
        c = set(cover)
        return all(i in c or j in c for i, j in self.edges)

    def edge_ideal(self) -> MonomialIdeal:
        gens = [tuple(1 if k in e else 0 for k in range(self.n)) for e in self.edges]
        return MonomialIdeal.from_generators(self.n, gens)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj, seen, stack = self.adjacency(), {0}, [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


@dataclass(frozen=True)
class WeightedOrientedGraph:
    """Arc set plus a positive weight per vertex; the underlying graph is derived.

    Both orientations of an edge may be present; each arc yields its own generator.
    """

    n: int
    arcs: frozenset  # of (source, target)
    weights: tuple

    def __post_init__(self):
        if len(self.weights) != self.n:
            raise MalformedInputError(f"need {self.n} weights, got {len(self.weights)}")
        if any((not isinstance(w, int)) or w < 1 for w in self.weights):
            raise MalformedInputError("vertex weights must be integers >= 1")
        arcs = frozenset(tuple(a) for a in self.arcs)
        for i, j in arcs:
            if i == j:
                raise MalformedInputError(f"self-arc at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise MalformedInputError(f"arc {(i, j)} out of range for n={self.n}")
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "weights", tuple(self.weights))

    @classmethod
    def build(cls, n, arcs, weights=None):
        return cls(n, frozenset(tuple(a) for a in arcs),
                   tuple(weights) if weights is not None else (1,) * n)

    @property
    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, frozenset((min(a), max(a)) for a in self.arcs))

    def out_neighbors(self, v: int) -> frozenset:
        return frozenset(j for i, j in self.arcs if i == v)

    def in_neighbors(self, v: int) -> frozenset:
        return frozenset(i for i, j in self.arcs if j == v)


def edge_ideal(D: WeightedOrientedGraph) -> MonomialIdeal:
    """I(D), one generator x_i * x_j^w(j) per arc (i, j)."""
    gens = []
    for i, j in D.arcs:
        g = [0] * D.n
        g[i] += 1
        g[j] += D.weights[j]
        gens.append(tuple(g))
    return MonomialIdeal.from_generators(D.n, gens)


# -- vertex covers --------------------------------------------------------------

def _check_cap(n, cap):
    if n > cap:
        raise ResourceLimitError(f"{n} vertices exceed the enumeration cap {cap}")


def _maximal_independent_sets(G: SimpleGraph) -> list:
    """Bron-Kerbosch with pivoting on the complement graph."""
    adj = G.adjacency()
    everyone = frozenset(range(G.n))
    # Neighbourhoods in the complement graph.
    co = [everyone - adj[v] - {v} for v in range(G.n)]
    found = []

    def expand(r, p, x):
        if not p and not x:
            found.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(p & co[u]))
        for v in list(p - co[pivot]):
            expand(r | {v}, p & co[v], x & co[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), everyone, frozenset())
    return found


def _canonical_covers(covers) -> list:
    return sorted((tuple(sorted(c)) for c in covers), key=lambda c: (len(c), c))


def minimal_vertex_covers(G: SimpleGraph, cap: int = DEFAULT_VERTEX_CAP) -> list:
    """All minimal vertex covers (complements of maximal independent sets)."""
    _check_cap(G.n, cap)
    everyone = frozenset(range(G.n))
    return _canonical_covers(everyone - s for s in _maximal_independent_sets(G))


def all_vertex_covers(G: SimpleGraph, cap: int = DEFAULT_VERTEX_CAP) -> list:
    _check_cap(G.n, cap)
    out = []
    for size in range(G.n + 1):
        for c in combinations(range(G.n), size):
            if G.is_vertex_cover(c):
                out.append(c)
    return out


def is_minimal_cover(G: SimpleGraph, cover) -> bool:
    """A cover is minimal iff each of its vertices has a neighbour outside it."""
    c = set(cover)
    if not G.is_vertex_cover(c):
        return False
    adj = G.adjacency()
    return all(adj[v] - c for v in c)


def minimal_vertex_covers_bruteforce(G: SimpleGraph,
                                     cap: int = BRUTEFORCE_VERTEX_CAP) -> list:
    """Subset enumeration keeping covers with no proper sub-cover."""
    covers = [frozenset(c) for c in all_vertex_covers(G, cap)]
    minimal = [c for c in covers if not any(d < c for d in covers)]
    return _canonical_covers(minimal)


def alpha_and_r(G: SimpleGraph, cap: int = DEFAULT_VERTEX_CAP):
    """(alpha(G), r(G), the minimum covers)."""
    covers = minimal_vertex_covers(G, cap)
    alpha = min(len(c) for c in covers)
    minimum = [c for c in covers if len(c) == alpha]
    return alpha, len(minimum), minimum


@dataclass(frozen=True)
class CoverPartition:
    cover: tuple
    l1: frozenset
    l2: frozenset
    l3: frozenset


def cover_partition(D: WeightedOrientedGraph, cover, directed: bool = True) -> CoverPartition:
    """Split a vertex cover into L1, L2, L3.

    ``directed=False`` selects the variant where L1 uses any neighbour outside
    the cover instead of an out-neighbour; it exists for comparison only.
    """
    G = D.underlying
    c = frozenset(cover)
    if not G.is_vertex_cover(c):
        raise NotACoverError(f"{sorted(c)} is not a vertex cover")
    adj = G.adjacency()
    if directed:
        l1 = frozenset(v for v in c if any(j not in c for j in D.out_neighbors(v)))
    else:
        l1 = frozenset(v for v in c if adj[v] - c)
    l3 = frozenset(v for v in c if adj[v] <= c)
    l2 = c - l1 - l3
    return CoverPartition(tuple(sorted(c)), l1, l2, l3)


def is_strong_cover(D: WeightedOrientedGraph, cover, directed: bool = True) -> bool:
    G = D.underlying
    if is_minimal_cover(G, cover):
        return True
    part = cover_partition(D, cover, directed)
    sources = part.l2 | part.l3
    return all(any(j in sources and D.weights[j] >= 2 for j in D.in_neighbors(v))
               for v in part.l3)


def strong_vertex_covers(D: WeightedOrientedGraph, cap: int = DEFAULT_VERTEX_CAP,
                         directed: bool = True) -> list:
    G = D.underlying
    return [c for c in all_vertex_covers(G, cap) if is_strong_cover(D, c, directed)]


def cover_ideal(D: WeightedOrientedGraph, cover, directed: bool = True) -> MonomialIdeal:
    """I_C = (x_i : i in L1) + (x_j^w(j) : j in L2 ∪ L3)."""
    part = cover_partition(D, cover, directed)
    gens = [variable(D.n, v) for v in part.l1]
    gens += [variable(D.n, v, D.weights[v]) for v in part.l2 | part.l3]
    return MonomialIdeal.from_generators(D.n, gens)


def cover_primary_decomposition(D: WeightedOrientedGraph, cap: int = DEFAULT_VERTEX_CAP,
                                directed: bool = True) -> PrimaryDecomposition:
    """One irreducible component I_C per strong cover, in canonical order."""
    comps = [PrimaryComponent(cover_ideal(D, c, directed), tuple(c), True)
             for c in strong_vertex_covers(D, cap, directed) if c]
    return PrimaryDecomposition(D.n, tuple(sorted(comps, key=PrimaryComponent.sort_key)))


def mult_oriented_closed(D: WeightedOrientedGraph, m: int, s: int,
                         cap: int = DEFAULT_VERTEX_CAP) -> int:
    """m^alpha * sum over minimum covers C of prod_{j in L2(C)} w(j) * C(alpha + s - 1, s - 1)."""
    if m < 1 or s < 1:
        raise MalformedInputError("m and s must be >= 1")
    alpha, _, minimum = alpha_and_r(D.underlying, cap)
    total = sum(prod(D.weights[v] for v in cover_partition(D, c).l2) for c in minimum)
    return m ** alpha * total * comb(alpha + s - 1, s - 1)


def connected_graphs(n: int) -> list:
    """All connected simple graphs on n vertices up to isomorphism."""
    from itertools import permutations

    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen, out = set(), []
    for mask in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
        G = SimpleGraph.from_edges(n, edges)
        if not G.is_connected():
            continue
        key = min(tuple(sorted((min(p[i], p[j]), max(p[i], p[j])) for i, j in edges))
                  for p in perms)
        if key not in seen:
            seen.add(key)
            out.append(SimpleGraph.from_edges(n, key))
    return out
