"""Exact monomial ideal arithmetic and multiplicities of powers."""

from .decompose import (
    IrreducibleComponent,
    PrimaryComponent,
    PrimaryDecomposition,
    height,
    irreducible_decomposition,
    is_irreducible,
    is_primary,
    min_height_components,
    primary_decomposition,
)
from .formulas import (
    FormulaReport,
    check_hypothesis,
    compute_mult,
    mult_power_closed,
    mult_power_components,
    mult_special_power_closed,
    mult_squarefree_closed,
)
from .graphs import SimpleGraph, WeightedOrientedGraph, edge_ideal, mult_oriented_closed
from .hilbert import (
    HilbertSummary,
    IntegerPolynomial,
    hilbert_function_bruteforce,
    hilbert_polynomial,
    hilbert_summary,
    k_polynomial,
    multiplicity,
)
from .ideal import (
    MonomialIdeal,
    colon_by_monomial,
    contains,
    ideal_sum,
    intersect,
    minimize,
    power,
    product,
    radical,
    special_power,
)

__all__ = [
    "FormulaReport",
    "HilbertSummary",
    "IntegerPolynomial",
    "IrreducibleComponent",
    "MonomialIdeal",
    "PrimaryComponent",
    "PrimaryDecomposition",
    "SimpleGraph",
    "WeightedOrientedGraph",
    "check_hypothesis",
    "colon_by_monomial",
    "compute_mult",
    "contains",
    "edge_ideal",
    "height",
    "hilbert_function_bruteforce",
    "hilbert_polynomial",
    "hilbert_summary",
    "ideal_sum",
    "intersect",
    "irreducible_decomposition",
    "is_irreducible",
    "is_primary",
    "k_polynomial",
    "min_height_components",
    "minimize",
    "mult_oriented_closed",
    "mult_power_closed",
    "mult_power_components",
    "mult_special_power_closed",
    "mult_squarefree_closed",
    "multiplicity",
    "power",
    "primary_decomposition",
    "product",
    "radical",
    "special_power",
]

__version__ = "0.1.0"
