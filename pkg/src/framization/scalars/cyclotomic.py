"""
Exact arithmetic in the cyclotomic field Q(zeta_d).

An element is stored as its coefficient vector in the power basis 1, zeta, ..., zeta^(phi(d)-1), i.e. as a
polynomial reduced modulo the d-th cyclotomic polynomial. That reduction makes the representation canonical, so
equality is plain tuple equality.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Sequence

from .upoly import UPoly, poly_xgcd


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """
    Integer coefficients (constant term first) of the d-th cyclotomic polynomial.

    >>> cyclotomic_polynomial(1), cyclotomic_polynomial(2), cyclotomic_polynomial(4)
    ((-1, 1), (1, 1), (1, 0, 1))
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if d < 1:
        raise ValueError(f"cyclotomic polynomial needs d >= 1, got {d}")
    num = [-1] + [0] * (d - 1) + [1]
    for k in range(1, d):
        if d % k == 0:
            num = _int_exact_div(num, cyclotomic_polynomial(k))
    return tuple(num)


def _int_exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic with integer coefficients, so the quotient stays integral.
    rem = list(num)
    db = len(den) - 1
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        q = rem[k + db]
        quot[k] = q
        if q:
            for j, b in enumerate(den):
                rem[k + j] -= q * b
    assert not any(rem), "cyclotomic division left a remainder"
    return quot


@functools.lru_cache(maxsize=None)
def euler_phi(d: int) -> int:
    return len(cyclotomic_polynomial(d)) - 1


@functools.lru_cache(maxsize=None)
def _modulus(d: int) -> UPoly:
    return UPoly(cyclotomic_polynomial(d))


def _reduce(d: int, coeffs: Sequence) -> tuple[Fraction, ...]:
    phi_poly = cyclotomic_polynomial(d)
    deg = len(phi_poly) - 1
    rem = [Fraction(c) for c in coeffs]
    # reduce X^k for k >= deg using the monic modulus
    for k in range(len(rem) - 1, deg - 1, -1):
        c = rem[k]
        if c:
            shift = k - deg
            for j in range(deg):
                if phi_poly[j]:
                    rem[shift + j] -= c * phi_poly[j]
    rem = rem[:deg] + [Fraction(0)] * (deg - len(rem))
    return tuple(rem)


class CyclotomicNumber:
    """
    An element of Q(zeta_d).

    >>> z3 = CyclotomicNumber.zeta(3)
    >>> z3 * z3 + z3 + 1
    CyclotomicNumber(3, '0')
    >>> CyclotomicNumber.zeta(4) ** 2 == -1
    True
    """

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: Sequence = ()):
        self.d = d
        self.coeffs: tuple[Fraction, ...] = _reduce(d, coeffs)

    @classmethod
    def rational(cls, d: int, q) -> CyclotomicNumber:
        return cls(d, [q])

    @classmethod
    def zeta(cls, d: int, k: int = 1) -> CyclotomicNumber:
        """zeta_d^k."""
        k %= d
        return cls(d, [0] * k + [1])

    def as_rational(self) -> Fraction | None:
        """The value as a Fraction when it lies in Q, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- coercion

    def _coerce(self, other) -> tuple[CyclotomicNumber, CyclotomicNumber]:
        if isinstance(other, CyclotomicNumber):
            if other.d == self.d:
                return self, other
            r = other.as_rational()
            if r is not None:
                return self, CyclotomicNumber(self.d, [r])
            r = self.as_rational()
            if r is not None:
                return CyclotomicNumber(other.d, [r]), other
            m = math.lcm(self.d, other.d)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber(self.d, [other])
        return NotImplemented, NotImplemented

    def lift(self, m: int) -> CyclotomicNumber:
        """Embed into Q(zeta_m) for a multiple m of d via zeta_d = zeta_m^(m/d)."""
        if m % self.d:
            raise ValueError(f"cannot embed Q(zeta_{self.d}) into Q(zeta_{m})")
        step = m // self.d
        out = [Fraction(0)] * (step * len(self.coeffs) + 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        return CyclotomicNumber(m, out)

    # -- arithmetic

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(a.d, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.d, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(a.d, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.d, [c * other for c in self.coeffs])
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        out = [Fraction(0)] * max(len(a.coeffs) + len(b.coeffs) - 1, 0)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return CyclotomicNumber(a.d, out)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        r = self.as_rational()
        if r is not None:
            return CyclotomicNumber(self.d, [1 / r])
        g, s, _ = poly_xgcd(UPoly(self.coeffs), _modulus(self.d))
        # Phi_d is irreducible, so the gcd is 1 and s is the inverse
        assert g == UPoly([1])
        return CyclotomicNumber(self.d, [Fraction(c) for c in s.coeffs])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> CyclotomicNumber:
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicNumber(self.d, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            r = self.as_rational()
            return r is not None and r == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if self.d == other.d:
            return self.coeffs == other.coeffs
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        r = self.as_rational()
        if r is not None:
            return hash(r)
        return hash((self.d, self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.d}, '{self}')"

    def __str__(self) -> str:
        return UPoly(self.coeffs).render("zeta")


def character_value(d: int, k: int, m: int) -> CyclotomicNumber:
    """
    The character chi_k of Z/dZ evaluated at m, i.e. zeta_d^(k*m).

    >>> character_value(2, 1, 1) == -1
    True
    """
    return CyclotomicNumber.zeta(d, k * m)
