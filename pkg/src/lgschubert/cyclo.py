"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are residues modulo the m-th cyclotomic polynomial Phi_m, stored as
dense coefficient vectors of length phi(m) over Fraction.  Mixing orders is
an error; callers embed into a common order explicitly with `embed`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _poly_divmod(num, den):
    """Quotient and remainder of dense Fraction coefficient lists."""
    num = [Fraction(c) for c in num]
    dd = len(den) - 1
    while den and den[-1] == 0:
        den = den[:-1]
        dd -= 1
    lead = Fraction(den[-1])
    quot = [Fraction(0)] * max(len(num) - dd, 0)
    while len(num) - 1 >= dd and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        shift = len(num) - 1 - dd
        q = num[-1] / lead
        quot[shift] = q
        for i, c in enumerate(den):
            num[shift + i] -= q * c
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients of Phi_m, low degree first."""
    if m < 1:
        raise ValueError("order must be positive")
    result = [-1] + [0] * (m - 1) + [1]  # z^m - 1
    for d in range(1, m):
        if m % d == 0:
            quot, rem = _poly_divmod(result, cyclotomic_polynomial(d))
            assert not rem, "cyclotomic division must be exact"
            result = quot
    return tuple(int(c) for c in result)


def euler_phi(m):
    return len(cyclotomic_polynomial(m)) - 1


class CyclotomicNumber:
    """An element of Q(zeta_m), reduced modulo Phi_m."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        phi = euler_phi(order)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > phi:
            _, coeffs = _poly_divmod(coeffs, list(cyclotomic_polynomial(order)))
        coeffs += [Fraction(0)] * (phi - len(coeffs))
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("CyclotomicNumber is immutable")

    @classmethod
    def from_rational(cls, value, order):
        return cls(order, [Fraction(value)])

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    f"mixed cyclotomic orders {self.order} and {other.order}; "
                    "embed into a common order first")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        prod[i + j] += ca * cb
        return CyclotomicNumber(self.order, prod)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse via the extended Euclidean algorithm against Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # invariant: old_r = old_s * self (mod Phi_m)
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        old_r, r = list(self.coeffs), phi
        old_s, s = [Fraction(1)], [Fraction(0)]
        while any(r):
            quot, rem = _poly_divmod(old_r, r)
            old_r, r = r, rem
            qs = [Fraction(0)] * (len(quot) + len(s) - 1) if s else []
            for i, qc in enumerate(quot):
                if qc:
                    for j, sc in enumerate(s):
                        qs[i + j] += qc * sc
            new_s = [a - b for a, b in
                     zip(old_s + [Fraction(0)] * max(0, len(qs) - len(old_s)),
                         qs + [Fraction(0)] * max(0, len(old_s) - len(qs)))]
            old_s, s = s, new_s
        while old_r and old_r[-1] == 0:
            old_r.pop()
        assert len(old_r) == 1, "Phi_m is not prime to a nonzero residue?"
        unit = old_r[0]
        return CyclotomicNumber(self.order, [c / unit for c in old_s])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("cyclotomic power must be an integer")
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = CyclotomicNumber.from_rational(1, self.order)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" if i == 0 else
                             (f"{c}*z^{i}" if i > 1 else f"{c}*z"))
        body = " + ".join(parts) if parts else "0"
        return f"Cyclo[{self.order}]({body})"


def zeta(m, power=1):
    """The root of unity zeta_m ** power in Q(zeta_m)."""
    power %= m
    return CyclotomicNumber(m, [0] * power + [1])


def embed(x, order):
    """Embed x from Q(zeta_m) into Q(zeta_order) via zeta_m -> zeta_order^(order/m).

    The target order must be a multiple of x's order; coercion is never
    silent anywhere else in the package.
    """
    if order % x.order:
        raise ValueError(f"order {x.order} does not divide {order}")
    step = order // x.order
    result = CyclotomicNumber.from_rational(0, order)
    for i, c in enumerate(x.coeffs):
        if c:
            result = result + zeta(order, i * step) * c
    return result
