"""Truncated formal power series on top of weighted-graded polynomials.

A series is a polynomial together with a truncation order: terms of weighted
degree above the order are discarded and never recovered, so callers must
pick the order they actually need.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial


def _truncate(poly, order):
    kept = {e: c for e, c in poly.terms.items() if poly.wdeg(e) <= order}
    return Polynomial(poly.vars, kept)


class PowerSeries:
    """A polynomial truncated at a fixed weighted degree."""

    __slots__ = ("poly", "order")

    def __init__(self, poly, order):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        object.__setattr__(self, "poly", _truncate(poly, order))
        object.__setattr__(self, "order", int(order))

    def __setattr__(self, *a):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def const(cls, value, order, vars=()):
        return cls(Polynomial.const(value, vars), order)

    def _common_order(self, other):
        if isinstance(other, PowerSeries):
            return min(self.order, other.order), other.poly
        return self.order, other

    def __add__(self, other):
        order, rhs = self._common_order(other)
        return PowerSeries(self.poly + rhs, order)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-self.poly, self.order)

    def __sub__(self, other):
        order, rhs = self._common_order(other)
        return PowerSeries(self.poly - rhs, order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        order, rhs = self._common_order(other)
        return PowerSeries(self.poly * rhs, order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series power must be a nonnegative integer")
        result = PowerSeries.const(1, self.order, self.poly.vars)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.order == other.order and self.poly == other.poly
        return self.poly == other

    def __hash__(self):
        return hash((self.poly, self.order))

    def constant_term(self):
        return self.poly.constant_term()

    def graded_component(self, w):
        if w > self.order:
            return Polynomial.zero(self.poly.vars)
        return self.poly.graded_component(w)

    def inverse(self):
        """Multiplicative inverse of a series with constant term 1, computed
        weight by weight from the convolution identity."""
        if self.constant_term() != 1:
            raise ValueError("series inverse needs constant term 1")
        higher = self.poly - Polynomial.const(1, self.poly.vars)
        high = {w: p for w, p in higher.homogeneous_components().items()
                if not p.is_zero()}
        inv = {0: Polynomial.const(1, self.poly.vars)}
        for w in range(1, self.order + 1):
            piece = Polynomial.zero(self.poly.vars)
            for i, hi in high.items():
                if i <= w and (w - i) in inv:
                    piece = piece - hi * inv[w - i]
            if not piece.is_zero():
                inv[w] = piece
        total = Polynomial.zero(self.poly.vars)
        for p in inv.values():
            total = total + p
        return PowerSeries(total, self.order)

    def __str__(self):
        return f"{self.poly} + O(weight {self.order + 1})"

    __repr__ = __str__


def compose_univariate(coeffs, u):
    """Sum coeffs[m] * u**m truncated at u's order.

    `coeffs` maps exponents to Fractions (dense list or dict); u must have
    zero constant term so the sum is weight-wise finite.
    """
    if u.constant_term() != 0:
        raise ValueError("composition needs a series with zero constant term")
    if not isinstance(coeffs, dict):
        coeffs = dict(enumerate(coeffs))
    result = PowerSeries.const(coeffs.get(0, Fraction(0)), u.order,
                               u.poly.vars)
    power = PowerSeries.const(1, u.order, u.poly.vars)
    top = max(coeffs) if coeffs else 0
    for m in range(1, top + 1):
        power = power * u
        if power.poly.is_zero():
            break
        c = coeffs.get(m, Fraction(0))
        if c:
            result = result + power * Polynomial.const(c, u.poly.vars)
    return result


def series_log1p(u):
    """log(1 + u) = sum_{m>=1} (-1)^(m+1) u^m / m for u with zero constant."""
    if u.constant_term() != 0:
        raise ValueError("series_log1p needs zero constant term")
    coeffs = {m: Fraction((-1) ** (m + 1), m) for m in range(1, u.order + 1)}
    return compose_univariate(coeffs, u)


def series_exp(u):
    """exp(u) = sum u^m / m! for u with zero constant term."""
    if u.constant_term() != 0:
        raise ValueError("series_exp needs zero constant term")
    coeffs, fact = {0: Fraction(1)}, 1
    for m in range(1, u.order + 1):
        fact *= m
        coeffs[m] = Fraction(1, fact)
    return compose_univariate(coeffs, u)


def binomial_half(m):
    """The binomial coefficient (1/2 choose m)."""
    c = Fraction(1)
    for i in range(m):
        c *= (Fraction(1, 2) - i) / (i + 1)
    return c


def series_sqrt1p(u):
    """(1 + u)^(1/2) as a binomial series; squaring returns 1 + u exactly up
    to the truncation order."""
    if u.constant_term() != 0:
        raise ValueError("series_sqrt1p needs zero constant term")
    coeffs = {m: binomial_half(m) for m in range(u.order + 1)}
    return compose_univariate(coeffs, u)
