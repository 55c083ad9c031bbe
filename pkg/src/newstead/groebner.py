"""Buchberger engine and quotient-ring queries for the relation ideals.

The reduced Groebner basis of the genus-g relation ideal has a strikingly
simple shape: its leading monomials are exactly the C(g+2, 2) monomials of
standard degree g, so the standard monomials are those of degree below g
and the quotient has dimension C(g+2, 3).  Everything here is exact; the
reduced basis is unique, hence independent of generator order.

Pair selection uses the normal strategy (smallest lcm degree first) with
Buchberger's coprime criterion and the classic chain criterion.  Division
always reduces by the basis element with the largest leading monomial that
divides, which makes normal forms deterministic step by step (the final
value is order-independent anyway).
"""

from __future__ import annotations

import heapq
from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .ring import Monomial, Polynomial

__all__ = [
    "ORDER_TAG",
    "GroebnerBasis",
    "StandardMonomialBasis",
    "s_polynomial",
    "normal_form",
    "buchberger",
    "relation_ideal_basis",
    "is_groebner_basis",
    "initial_ideal_minimal_generators",
    "standard_monomials",
    "hilbert_series",
    "complete_intersection_hilbert",
    "pairing_ratio",
    "ideal_equal",
]

ORDER_TAG = "grevlex-abc"

# reducer entry: (leading monomial, leading coefficient, tail terms)
_Reducer = Tuple[Monomial, Fraction, Dict[Monomial, Fraction]]


def _reducer_entry(p: Polynomial) -> _Reducer:
    lm = p.leading_monomial()
    terms = dict(p.terms)
    lc = terms.pop(lm)
    return (lm, lc, terms)


def _reducer_key(entry: _Reducer):
    return entry[0].sort_key()


def _make_reducers(polys: Iterable[Polynomial]) -> List[_Reducer]:
    entries = [_reducer_entry(p) for p in polys if p]
    entries.sort(key=_reducer_key)
    return entries


def _reduce_terms(work: Dict[Monomial, Fraction], reducers: List[_Reducer]):
    """Full multivariate division remainder of `work` (consumed) by the
    reducers, which must be sorted ascending by leading monomial."""
    out: Dict[Monomial, Fraction] = {}
    while work:
        m = max(work)
        cf = work.pop(m)
        # reversed scan: the first divisor found has the largest lead
        for lm, lc, tail in reversed(reducers):
            if lm.divides(m):
                qa, qb, qc = m.a - lm.a, m.b - lm.b, m.c - lm.c
                factor = cf / lc
                for tm, tc in tail.items():
                    key = Monomial(tm.a + qa, tm.b + qb, tm.c + qc)
                    value = work.get(key, 0) - factor * tc
                    if value:
                        work[key] = value
                    else:
                        work.pop(key, None)
                break
        else:
            out[m] = cf
    return out


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """The syzygy polynomial cancelling the two leading terms."""
    lmf, lmg = f.leading_monomial(), g.leading_monomial()
    big = lmf.lcm(lmg)
    left = _mono_scale(f, big // lmf, 1 / f.leading_coefficient())
    right = _mono_scale(g, big // lmg, 1 / g.leading_coefficient())
    return left - right


def _mono_scale(p: Polynomial, mono: Monomial, scalar) -> Polynomial:
    q = Fraction(scalar)
    return Polynomial._raw(
        {
            Monomial(m.a + mono.a, m.b + mono.b, m.c + mono.c): v * q
            for m, v in p.terms.items()
        }
    )


def normal_form(
    p: Polynomial, basis: Union["GroebnerBasis", Sequence[Polynomial]]
) -> Polynomial:
    """Remainder of p modulo the basis; linear and idempotent."""
    elements = basis.elements if isinstance(basis, GroebnerBasis) else tuple(basis)
    return Polynomial._raw(_reduce_terms(dict(p.terms), _make_reducers(elements)))


def _autoreduce(polys: Iterable[Polynomial]) -> List[Polynomial]:
    """Reduce every element modulo the others until stable.

    Ideal-preserving for arbitrary input; applied to a Groebner basis it
    yields the reduced basis, sorted ascending by leading monomial.
    """
    current = [p.monic() for p in polys if p]
    changed = True
    while changed:
        changed = False
        for i in range(len(current)):
            others = current[:i] + current[i + 1 :]
            if not others:
                break
            reduced = Polynomial._raw(
                _reduce_terms(dict(current[i].terms), _make_reducers(others))
            )
            if reduced != current[i]:
                changed = True
                if reduced:
                    current[i] = reduced.monic()
                else:
                    del current[i]
                break
    current.sort(key=lambda p: p.leading_monomial().sort_key())
    return current


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic elements sorted by leading monomial."""

    elements: Tuple[Polynomial, ...]
    genus: Optional[int] = None
    order_tag: str = ORDER_TAG

    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(p.leading_monomial() for p in self.elements)

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.elements)

    def contains(self, p: Polynomial) -> bool:
        return not self.normal_form(p)


def buchberger(
    generators: Iterable[Polynomial], genus: Optional[int] = None
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by the generators."""
    gens = list(generators)
    for p in gens:
        if not isinstance(p, Polynomial):
            raise TypeError(f"generator {p!r} is not a Polynomial")
        if not p:
            raise ValueError("generators must be nonzero")
    basis = _autoreduce(gens)
    if not basis:
        return GroebnerBasis((), genus=genus)

    lms = [p.leading_monomial() for p in basis]
    reducers = _make_reducers(basis)
    heap: List[Tuple[int, Tuple[int, int, int], int, int]] = []
    pending = set()

    def queue(i: int, j: int) -> None:
        big = lms[i].lcm(lms[j])
        heapq.heappush(heap, (big.degree, big.sort_key(), i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            queue(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lmi, lmj = lms[i], lms[j]
        if lmi.coprime(lmj):
            continue
        big = lmi.lcm(lmj)
        # chain criterion: some third lead divides the lcm and both side
        # pairs have already left the queue
        skippable = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if lms[k].divides(big):
                pik = (i, k) if i < k else (k, i)
                pjk = (j, k) if j < k else (k, j)
                if pik not in pending and pjk not in pending:
                    skippable = True
                    break
        if skippable:
            continue
        remainder = _reduce_terms(dict(s_polynomial(basis[i], basis[j]).terms), reducers)
        if not remainder:
            continue
        new = Polynomial._raw(remainder).monic()
        basis.append(new)
        lms.append(new.leading_monomial())
        insort(reducers, _reducer_entry(new), key=_reducer_key)
        fresh = len(basis) - 1
        for k in range(fresh):
            queue(k, fresh)

    return GroebnerBasis(tuple(_autoreduce(basis)), genus=genus)


def relation_ideal_basis(genus: int) -> GroebnerBasis:
    """Reduced basis of the genus-g relation ideal."""
    from .relations import relations_by_recursion

    triple = relations_by_recursion(genus)
    return buchberger(triple.polynomials(), genus=genus)


def is_groebner_basis(polys: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    polys = [p for p in polys if p]
    reducers = _make_reducers(polys)
    for j in range(len(polys)):
        for i in range(j):
            s = s_polynomial(polys[i], polys[j])
            if _reduce_terms(dict(s.terms), reducers):
                return False
    return True


def initial_ideal_minimal_generators(gb: GroebnerBasis) -> frozenset:
    """Minimal monomial generators of the initial ideal.

    For a reduced basis these are exactly the leading monomials; for the
    genus-g relation ideal they are all C(g+2, 2) monomials of standard
    degree g.
    """
    return frozenset(gb.leading_monomials())


@dataclass(frozen=True)
class StandardMonomialBasis:
    """Monomials outside the initial ideal, a basis of the quotient."""

    genus: Optional[int]
    monomials: Tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def counts_by_weight(self) -> Tuple[int, ...]:
        top = max((m.weight for m in self.monomials), default=0)
        counts = [0] * (top + 1)
        for m in self.monomials:
            counts[m.weight] += 1
        return tuple(counts)


def standard_monomials(gb: GroebnerBasis) -> StandardMonomialBasis:
    """Enumerate the standard monomials, sorted by (weight, grevlex).

    Requires the quotient to be finite dimensional, i.e. the initial ideal
    must contain a pure power of each variable.
    """
    lms = gb.leading_monomials()
    bounds = []
    for pick in (
        lambda m: (m.a, m.b == 0 and m.c == 0),
        lambda m: (m.b, m.a == 0 and m.c == 0),
        lambda m: (m.c, m.a == 0 and m.b == 0),
    ):
        pure = [pick(m)[0] for m in lms if pick(m)[1]]
        if not pure:
            raise ValueError(
                "quotient ring is infinite dimensional (no pure power of "
                "some variable among the leading monomials)"
            )
        bounds.append(min(pure))
    found = []
    for a in range(bounds[0]):
        for b in range(bounds[1]):
            for c in range(bounds[2]):
                m = Monomial(a, b, c)
                if not any(lm.divides(m) for lm in lms):
                    found.append(m)
    found.sort(key=lambda m: (m.weight, m.sort_key()))
    return StandardMonomialBasis(genus=gb.genus, monomials=tuple(found))


def hilbert_series(gb: GroebnerBasis) -> Tuple[int, ...]:
    """Graded dimensions of the quotient, indexed by weighted degree."""
    return standard_monomials(gb).counts_by_weight()


def _poly_mul_z(p: List[int], q: List[int]) -> List[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _poly_div_exact_z(num: List[int], den: List[int]) -> List[int]:
    """Long division of integer polynomials; the remainder must vanish."""
    num = list(num)
    d = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        coeff = num[i]
        if coeff % lead:
            raise ArithmeticError("inexact polynomial division")
        q = coeff // lead
        out[i - d] = q
        if q:
            for j, y in enumerate(den):
                num[i - d + j] -= q * y
    if any(num[:d]):
        raise ArithmeticError("inexact polynomial division")
    return out


def complete_intersection_hilbert(genus: int) -> Tuple[int, ...]:
    """Expansion of (1-t^g)(1-t^(g+1))(1-t^(g+2)) / ((1-t)(1-t^2)(1-t^3)).

    This is the Hilbert series a quotient by a regular sequence of weighted
    degrees g, g+1, g+2 must have; it is the independent closed-form check
    against the monomial count of `hilbert_series`.
    """
    if genus < 1:
        raise ValueError("genus must be at least 1")

    def one_minus(power: int) -> List[int]:
        coeffs = [0] * (power + 1)
        coeffs[0] = 1
        coeffs[power] = -1
        return coeffs

    num = [1]
    for d in (genus, genus + 1, genus + 2):
        num = _poly_mul_z(num, one_minus(d))
    den = [1]
    for d in (1, 2, 3):
        den = _poly_mul_z(den, one_minus(d))
    return tuple(_poly_div_exact_z(num, den))


def pairing_ratio(mono: Monomial, gb: GroebnerBasis) -> Fraction:
    """Socle coefficient of a top-weight monomial modulo the ideal.

    The unique standard monomial of weighted degree 3g-3 is c^(g-1); the
    normal form of any monomial of that weight is a rational multiple of
    it, and this returns the multiplier.  Intersection numbers against the
    fundamental class are proportional to these ratios, with a global
    normalization this package does not fix.
    """
    if gb.genus is None:
        raise ValueError("pairing ratios need a genus-tagged basis")
    top = 3 * gb.genus - 3
    if mono.weight != top:
        raise ValueError(
            f"monomial {mono} has weighted degree {mono.weight}, "
            f"but the socle lives in weighted degree {top}"
        )
    nf = gb.normal_form(Polynomial({mono: 1}))
    return nf.coefficient(Monomial(0, 0, gb.genus - 1))


def ideal_equal(
    gens1: Iterable[Polynomial],
    gens2: Iterable[Polynomial],
    basis1: Optional[GroebnerBasis] = None,
    basis2: Optional[GroebnerBasis] = None,
) -> bool:
    """True when the two generating sets span the same ideal.

    Checked by reducing each side's generators modulo the other side's
    basis.  Precomputed bases may be supplied to avoid redundant work.
    """
    list1 = [p for p in gens1 if p]
    list2 = [p for p in gens2 if p]
    gb1 = basis1 if basis1 is not None else buchberger(list1)
    gb2 = basis2 if basis2 is not None else buchberger(list2)
    return all(gb1.contains(p) for p in list2) and all(
        gb2.contains(p) for p in list1
    )


def expected_initial_ideal(genus: int) -> frozenset:
    """All C(g+2, 2) monomials of standard degree exactly g."""
    return frozenset(
        Monomial(a, b, genus - a - b)
        for a in range(genus + 1)
        for b in range(genus + 1 - a)
    )


def expected_standard_count(genus: int) -> int:
    """C(g+2, 3), the number of monomials of standard degree below g."""
    return comb(genus + 2, 3)
