"""Closed-form multiplicities of powers and special powers of monomial ideals.

For a monomial ideal I of height h whose minimal-height primary components
Q_1, ..., Q_r are irreducible, say Q_i = (x^a_i1, ..., x^a_ih):

    mult(R/I^s)         = (sum_i prod_j a_ij) * C(h + s - 1, s - 1)
    mult(R/(I^{m})^s)   = m^h * C(h + s - 1, s - 1) * mult(R/I)

Without the irreducibility hypothesis only the component sum
mult(R/I^s) = sum_i mult(R/Q_i^s) survives, and it is evaluated with the
Hilbert engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod

from .decompose import IrreducibleComponent, PrimaryDecomposition, primary_decomposition
from .errors import HypothesisViolatedError, MalformedInputError, NotSquareFreeError
from .hilbert import multiplicity
from .ideal import DEFAULT_GENERATOR_CAP, MonomialIdeal, power, special_power

CLOSED_FORM = "closed_form"
COMPONENT_SUM = "component_sum"
ENGINE_FALLBACK = "engine_fallback"


@dataclass(frozen=True)
class FormulaReport:
    applicable: bool
    h: int
    r: int
    base_mult: int
    value: int
    method: str
    s: int = 1
    m: int = 1


def power_binomial(h: int, s: int) -> int:
    """C(h + s - 1, s - 1)."""
    return comb(h + s - 1, s - 1)


def _check_exponent(name, value):
    if value < 1:
        raise MalformedInputError(f"{name} must be >= 1, got {value}")


def check_hypothesis(pd: PrimaryDecomposition) -> bool:
    """Every minimal-height component is irreducible."""
    return all(c.is_irreducible for c in pd.min_height_components())


def closed_base_mult(pd: PrimaryDecomposition) -> int:
    """sum over minimal-height components of the product of their pure-power exponents."""
    if not check_hypothesis(pd):
        raise HypothesisViolatedError(
            "a minimal-height primary component is not irreducible")
    return sum(prod(IrreducibleComponent.from_ideal(c.ideal).exponents)
               for c in pd.min_height_components())


def mult_power_components(pd: PrimaryDecomposition, s: int,
                          max_generators: int = DEFAULT_GENERATOR_CAP) -> int:
    """sum_i mult(R/Q_i^s) over the minimal-height components, each by the engine."""
    _check_exponent("s", s)
    return sum(multiplicity(power(c.ideal, s, max_generators))
               for c in pd.min_height_components())


def mult_power_closed(pd: PrimaryDecomposition, s: int) -> FormulaReport:
    _check_exponent("s", s)
    base = closed_base_mult(pd)
    h = pd.height
    return FormulaReport(True, h, len(pd.min_height_components()), base,
                         base * power_binomial(h, s), CLOSED_FORM, s=s)


def mult_special_power_closed(pd: PrimaryDecomposition, m: int, s: int) -> FormulaReport:
    _check_exponent("m", m)
    _check_exponent("s", s)
    base = closed_base_mult(pd)
    h = pd.height
    return FormulaReport(True, h, len(pd.min_height_components()), base,
                         m ** h * power_binomial(h, s) * base, CLOSED_FORM, s=s, m=m)


def mult_squarefree_closed(I: MonomialIdeal, m: int, s: int) -> int:
    """r * m^h * C(h + s - 1, s - 1) for a square-free ideal."""
    _check_exponent("m", m)
    _check_exponent("s", s)
    if not I.is_squarefree():
        raise NotSquareFreeError(f"{I} has a generator with exponent > 1")
    pd = primary_decomposition(I)
    h = pd.height
    return len(pd.min_height_components()) * m ** h * power_binomial(h, s)


def engine_mult(I: MonomialIdeal, m: int = 1, s: int = 1,
                max_generators: int = DEFAULT_GENERATOR_CAP) -> int:
    """mult(R/(I^{m})^s) from the explicitly expanded ideal."""
    _check_exponent("m", m)
    _check_exponent("s", s)
    return multiplicity(power(special_power(I, m), s, max_generators))


def compute_mult(I: MonomialIdeal, m: int = 1, s: int = 1, method: str = "closed",
                 max_generators: int = DEFAULT_GENERATOR_CAP) -> FormulaReport:
    """Dispatch used by the command line.

    ``closed`` raises :class:`HypothesisViolatedError` when the formula does not
    apply; ``components`` applies the component sum to I^{m} (valid for all
    monomial ideals); ``engine`` expands (I^{m})^s and runs the Hilbert engine.
    """
    pd = primary_decomposition(I)
    h, r = pd.height, len(pd.min_height_components())
    applicable = check_hypothesis(pd)
    if method == "closed":
        if not applicable:
            raise HypothesisViolatedError(
                "closed form needs irreducible minimal-height components; "
                "use --method components or engine")
        return mult_special_power_closed(pd, m, s)
    base = closed_base_mult(pd) if applicable else mult_power_components(pd, 1)
    if method == "components":
        target = pd if m == 1 else primary_decomposition(special_power(I, m))
        value = mult_power_components(target, s, max_generators)
        return FormulaReport(applicable, h, r, base, value, COMPONENT_SUM, s=s, m=m)
    if method == "engine":
        value = engine_mult(I, m, s, max_generators)
        return FormulaReport(applicable, h, r, base, value, ENGINE_FALLBACK, s=s, m=m)
    raise MalformedInputError(f"unknown method {method!r}")
