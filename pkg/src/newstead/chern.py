"""Weighted-graded expansions of the two closed-form total Chern classes.

Two bundles matter here: the rank g-1 quotient bundle pulled back from the
Grassmannian embedding of the moduli space, and the tangent bundle of the
moduli space itself.  Both total Chern classes have closed forms in the
invariant classes, expanded here by direct truncated arithmetic in the
weighted grading, deliberately independent of the power-series route; the
agreement of the two pipelines is one of the package's cross-checks.

The closed forms:

    c(Q)  = (1 - beta)^(-1/2)
            * exp[ alpha + sum_{m>=1} (alpha beta^m + 2 gamma beta^(m-1)) / (2m+1) ]
    c(T)  = (1 - beta)^g * exp(-4 gamma / (1 - beta)) * c(Q)^2

where the graded component of weighted degree w is the w-th Chern class.
Above weighted degree 2g-2 every component of c(T) lies in the relation
ideal, i.e. vanishes in the cohomology ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Tuple

from .groebner import GroebnerBasis, ideal_equal
from .ring import ALPHA, BETA, GAMMA, ONE, ZERO, Monomial, Polynomial

__all__ = [
    "QUOTIENT_BUNDLE",
    "TANGENT_MODULI",
    "GradedClass",
    "quotient_chern",
    "tangent_chern",
    "chern_matches_series",
    "chern_relations_check",
    "tangent_vanishing_check",
]

QUOTIENT_BUNDLE = "quotient_bundle"
TANGENT_MODULI = "tangent_moduli"


@dataclass(frozen=True)
class GradedClass:
    """Graded components indexed by weighted degree 0..max_degree."""

    label: str
    components: Tuple[Polynomial, ...]

    @property
    def max_degree(self) -> int:
        return len(self.components) - 1

    def component(self, weight: int) -> Polynomial:
        if not 0 <= weight <= self.max_degree:
            raise ValueError(
                f"component of weight {weight} beyond truncation {self.max_degree}"
            )
        return self.components[weight]

    def total(self) -> Polynomial:
        result = ZERO
        for c in self.components:
            result = result + c
        return result


def _components(p: Polynomial, max_weight: int) -> Tuple[Polynomial, ...]:
    return tuple(p.homogeneous_component(w) for w in range(max_weight + 1))


def _exp_truncated(x: Polynomial, max_weight: int) -> Polynomial:
    """exp(x) truncated by weighted degree; x must have no constant term."""
    if x.coefficient(Monomial()):
        raise ValueError("exponential needs a zero constant term")
    acc = ONE
    term = ONE
    for k in range(1, max_weight + 1):
        term = (term * x).weight_truncate(max_weight) / k
        if not term:
            break
        acc = acc + term
    return acc


def _one_minus_beta_power(exponent: Fraction, max_weight: int) -> Polynomial:
    """(1 - beta)^exponent as a truncated binomial series in beta."""
    acc = ONE
    coeff = Fraction(1)
    power = ONE
    for k in range(1, max_weight // 2 + 1):
        coeff *= Fraction(exponent - k + 1, k)
        power = power * (-BETA)
        if not coeff:
            break
        acc = acc + coeff * power
    return acc


def quotient_chern(max_weight: int) -> GradedClass:
    """Total Chern class of the pulled-back quotient bundle, graded.

    The exponent is assembled from the two beta-free families
    alpha beta^m / (2m+1) and 2 gamma beta^(m-1) / (2m+1), so no division
    by beta ever happens.
    """
    if max_weight < 0:
        raise ValueError("truncation weight must be non-negative")
    x = ALPHA if max_weight >= 1 else ZERO
    m = 1
    while 2 * m + 1 <= max_weight:
        x = x + (ALPHA * BETA**m + 2 * GAMMA * BETA ** (m - 1)) / (2 * m + 1)
        m += 1
    total = _one_minus_beta_power(Fraction(-1, 2), max_weight) * _exp_truncated(
        x, max_weight
    )
    return GradedClass(QUOTIENT_BUNDLE, _components(total, max_weight))


def tangent_chern(genus: int, max_weight: int) -> GradedClass:
    """Total Chern class of the tangent bundle of the genus-g moduli space.

    Expanded as (1-beta)^g * exp(-4 gamma / (1-beta)) * c(Q)^2 with the
    exponential handled as sum_k (-4 gamma)^k (1-beta)^(-k) / k!; gamma has
    weight 3, so the k-sum stops at max_weight // 3 and no rational
    function arithmetic is needed.
    """
    if genus < 2:
        raise ValueError("the tangent class needs genus at least 2")
    if max_weight < 0:
        raise ValueError("truncation weight must be non-negative")

    base = _one_minus_beta_power(Fraction(genus), max_weight)

    exp_part = ONE
    gamma_power = ONE
    kfact = 1
    for k in range(1, max_weight // 3 + 1):
        kfact *= k
        gamma_power = gamma_power * (-4 * GAMMA)
        geom = ZERO
        for j in range((max_weight - 3 * k) // 2 + 1):
            geom = geom + comb(k + j - 1, j) * BETA**j
        exp_part = exp_part + (gamma_power * geom) / kfact

    q_total = quotient_chern(max_weight).total()
    q_squared = (q_total * q_total).weight_truncate(max_weight)
    total = ((base * exp_part).weight_truncate(max_weight) * q_squared).weight_truncate(
        max_weight
    )
    return GradedClass(TANGENT_MODULI, _components(total, max_weight))


def chern_matches_series(genus: int) -> bool:
    """Compare c_r(Q) with the t^r series coefficient for all r <= g+2.

    The two sides come from independent expansion pipelines (graded
    truncation here, t-truncation in the series module).
    """
    from .series import generating_series

    graded = quotient_chern(genus + 2)
    series = generating_series(genus + 2)
    return all(
        graded.component(r) == series.coefficient(r) for r in range(genus + 3)
    )


def chern_relations_check(genus: int, gb: GroebnerBasis) -> bool:
    """c_g, c_{g+1}, c_{g+2} of the quotient bundle generate the ideal.

    Checks membership (zero normal form) and two-sided ideal equality
    against the relation triple.
    """
    from .relations import relations_by_recursion

    graded = quotient_chern(genus + 2)
    classes = [graded.component(r) for r in (genus, genus + 1, genus + 2)]
    if any(gb.normal_form(c) for c in classes):
        return False
    triple = relations_by_recursion(genus)
    return ideal_equal(classes, triple.polynomials(), basis2=gb)


def tangent_vanishing_check(genus: int, gb: GroebnerBasis) -> bool:
    """Tangent Chern classes above weighted degree 2g-2 vanish mod the ideal.

    Checks every component with weighted degree in (2g-2, 3g-3].
    """
    top = 3 * genus - 3
    graded = tangent_chern(genus, top)
    return all(
        not gb.normal_form(graded.component(w))
        for w in range(2 * genus - 1, top + 1)
    )
