"""
Dense univariate polynomials over an exact field.

Coefficients are stored low degree first. Any coefficient type supporting the field operations works; in practice
they are ``Fraction`` or ``CyclotomicNumber``. Cyclotomic coefficients that happen to be rational are demoted to
``Fraction`` so that the cheap path is taken whenever possible.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _demote(c):
    if isinstance(c, int):
        return Fraction(c)
    rational = getattr(c, "as_rational", None)
    if rational is not None:
        r = rational()
        if r is not None:
            return r
    return c


class UPoly:
    """
    A polynomial in one variable.

    >>> p = UPoly([1, 0, 1])
    >>> p * p
    UPoly('X^4 + 2*X^2 + 1')
    >>> divmod(UPoly([-1, 0, 1]), UPoly([-1, 1]))
    (UPoly('X + 1'), UPoly('0'))
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_demote(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self._hash = None

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> UPoly:
        return cls([0] * degree + [coeff])

    def deg(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPoly):
            other = UPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __neg__(self) -> UPoly:
        return UPoly([-c for c in self.coeffs])

    def __add__(self, other) -> UPoly:
        if not isinstance(other, UPoly):
            other = UPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> UPoly:
        if not isinstance(other, UPoly):
            other = UPoly([other])
        return self + (-other)

    def __rsub__(self, other) -> UPoly:
        return (-self) + other

    def __mul__(self, other) -> UPoly:
        if not isinstance(other, UPoly):
            other = _demote(other)
            return UPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> UPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = UPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: UPoly) -> tuple[UPoly, UPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.deg()
        inv_lead = 1 / other.lead()
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if c == 0:
                continue
            q = c * inv_lead
            quot[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * b
        return UPoly(quot), UPoly(rem[:db] if db > 0 else [])

    def __floordiv__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: UPoly) -> UPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> UPoly:
        if self.is_zero():
            return self
        return self * (1 / self.lead())

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_power(self, k: int) -> UPoly:
        """Substitute X -> X^k."""
        out = [0] * (k * max(self.deg(), 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return UPoly(out)

    def __repr__(self) -> str:
        return f"UPoly('{self.render('X')}')"

    def render(self, var: str = "X") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            parts.append(_term(c, mono))
        return _join(parts)


def _term(c, mono: str) -> tuple[str, str]:
    """Split a coefficient-monomial pair into (sign, body)."""
    if isinstance(c, Fraction):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        cs = str(a)
        if not mono:
            return sign, cs
        return sign, mono if a == 1 else f"{cs}*{mono}"
    text = str(c)
    if not mono:
        return "+", text if " " not in text else f"({text})"
    return "+", f"({text})*{mono}"


def _join(parts: Sequence[tuple[str, str]]) -> str:
    out = []
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd (the gcd of two zero polynomials is zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = a, b
    s0, s1 = UPoly([1]), UPoly()
    t0, t1 = UPoly(), UPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lead()
    return r0 * inv, s0 * inv, t0 * inv
