"""Truncated formal power series in t with polynomial coefficients.

The centrepiece is `generating_series`: a single series whose r-th Taylor
derivative at 0 is the first relation generator of genus r, so one series
produces the relation ideals of every genus simultaneously.  It satisfies
the first-order differential equation checked by
`functional_equation_residual`, and its t^k coefficient is weighted
homogeneous of weighted degree k.

Operations on two series truncate to the smaller of the two orders;
requesting a coefficient beyond the truncation order is an error, never a
silent zero.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Optional, Tuple, Union

from .ring import ALPHA, BETA, GAMMA, ONE, ZERO, Polynomial

__all__ = [
    "PowerSeries",
    "series_exp",
    "series_binomial",
    "generating_series",
    "taylor_derivative",
    "functional_equation_residual",
]


def _coerce_poly(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value) if value else ZERO
    raise TypeError(f"cannot use {value!r} as a series coefficient")


class PowerSeries:
    """Polynomial coefficients indexed by the t-exponent 0..order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable = (), order: Optional[int] = None):
        coeffs = [_coerce_poly(c) for c in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be non-negative")
            del coeffs[order + 1 :]
            coeffs.extend([ZERO] * (order + 1 - len(coeffs)))
        elif not coeffs:
            raise ValueError("a series needs coefficients or an explicit order")
        self._coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> Tuple[Polynomial, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> Polynomial:
        if not 0 <= k <= self.order:
            raise ValueError(
                f"coefficient of t^{k} requested beyond truncation order {self.order}"
            )
        return self._coeffs[k]

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(
                f"cannot extend a series truncated at order {self.order} to {order}"
            )
        return PowerSeries(self._coeffs[: order + 1])

    def derivative(self) -> "PowerSeries":
        """Formal d/dt; the result is known one order less far."""
        if self.order < 1:
            raise ValueError("cannot differentiate a series truncated at order 0")
        return PowerSeries(
            [(k + 1) * self._coeffs[k + 1] for k in range(self.order)]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self._coeffs])

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(
            [self._coeffs[k] + other._coeffs[k] for k in range(n + 1)]
        )

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(
            [self._coeffs[k] - other._coeffs[k] for k in range(n + 1)]
        )

    def __mul__(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            coeffs = [ZERO] * (n + 1)
            for i, ci in enumerate(self._coeffs[: n + 1]):
                if not ci:
                    continue
                for j in range(n + 1 - i):
                    cj = other._coeffs[j]
                    if cj:
                        coeffs[i + j] = coeffs[i + j] + ci * cj
            return PowerSeries(coeffs)
        if isinstance(other, (int, Fraction, Polynomial)):
            return PowerSeries([c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "; ".join(f"t^{k}: {c}" for k, c in enumerate(self._coeffs))

    def __repr__(self) -> str:
        return f"PowerSeries(order={self.order}, {self})"


def series_exp(s: PowerSeries) -> PowerSeries:
    """exp(s) = sum s^k / k!, for s with zero constant coefficient."""
    if s.coefficient(0):
        raise ValueError("series exponential needs a zero constant coefficient")
    n = s.order
    acc = PowerSeries([ONE], order=n)
    term = acc
    for k in range(1, n + 1):
        term = term * s * Fraction(1, k)
        if term.is_zero():
            break
        acc = acc + term
    return acc


def series_binomial(u: PowerSeries, exponent: Union[int, Fraction]) -> PowerSeries:
    """(1 + u)^exponent via the generalized binomial series.

    `u` must have zero constant coefficient; the binomial coefficients are
    exact rationals.
    """
    if u.coefficient(0):
        raise ValueError("binomial series needs a zero constant coefficient")
    e = Fraction(exponent)
    n = u.order
    acc = PowerSeries([ONE], order=n)
    power = acc
    coeff = Fraction(1)
    for k in range(1, n + 1):
        coeff *= Fraction(e - k + 1, k)
        power = power * u
        if power.is_zero():
            break
        if coeff:
            acc = acc + coeff * power
    return acc


def generating_series(order: int) -> PowerSeries:
    """The generating series of the relation ideals, truncated at `order`.

    It is the product of (1 - beta t^2)^(-1/2) with the exponential of

        alpha t + sum_{m>=1} (alpha beta^m + 2 gamma beta^(m-1)) t^(2m+1) / (2m+1).

    The exponent is assembled from two beta-free families so that no
    division by beta is ever performed; every coefficient is a genuine
    polynomial, weighted homogeneous of weighted degree equal to its
    t-exponent.
    """
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    exponent = [ZERO] * (order + 1)
    if order >= 1:
        exponent[1] = ALPHA
    m = 1
    while 2 * m + 1 <= order:
        exponent[2 * m + 1] = (ALPHA * BETA**m + 2 * GAMMA * BETA ** (m - 1)) / (
            2 * m + 1
        )
        m += 1
    u = PowerSeries([ZERO, ZERO, -BETA], order=order)
    return series_binomial(u, Fraction(-1, 2)) * series_exp(PowerSeries(exponent))


def taylor_derivative(s: PowerSeries, r: int) -> Polynomial:
    """r! times the t^r coefficient: the r-th derivative at t = 0."""
    if r < 0:
        raise ValueError("derivative order must be non-negative")
    if r > s.order:
        raise ValueError(
            f"derivative of order {r} needs the series beyond its truncation "
            f"order {s.order}"
        )
    return factorial(r) * s.coefficient(r)


def functional_equation_residual(s: PowerSeries) -> PowerSeries:
    """(1 - beta t^2) s'(t) - (alpha + beta t + 2 gamma t^2) s(t).

    Zero through order N-1 exactly when s solves the differential equation
    of the generating series; the result is truncated at order N-1.
    """
    n = s.order
    if n < 1:
        raise ValueError("residual needs a series of order at least 1")
    lhs = PowerSeries([ONE, ZERO, -BETA], order=n - 1) * s.derivative()
    rhs = PowerSeries([ALPHA, BETA, 2 * GAMMA], order=n - 1) * s
    return lhs - rhs
