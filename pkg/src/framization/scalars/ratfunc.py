"""
Rational functions in v over Q(zeta_d), with the convention u = v^2, and the formal square-root extension used by
the invariant prefactors.
"""
from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CyclotomicNumber
from .upoly import UPoly, poly_gcd


class RationalFunction:
    """
    A reduced fraction num/den of polynomials in v, den monic.

    >>> u = RationalFunction.u()
    >>> -1 / (u + 1)
    RationalFunction('-1/(v^2 + 1)')
    >>> (u - 1) / (RationalFunction.v() - 1)
    RationalFunction('v + 1')
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: UPoly, den: UPoly | None = None, _reduced: bool = False):
        if den is None:
            den = UPoly([1])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = UPoly([1])
            else:
                g = poly_gcd(num, den)
                if g.deg() > 0:
                    num, den = num.exact_div(g), den.exact_div(g)
                lead = den.lead()
                if lead != 1:
                    inv = 1 / lead
                    num, den = num * inv, den * inv
        self.num, self.den = num, den
        self._hash = None

    # -- constructors

    @classmethod
    def const(cls, c) -> RationalFunction:
        return cls(UPoly([c]), _reduced=True)

    @classmethod
    def v(cls) -> RationalFunction:
        return cls(UPoly([0, 1]), _reduced=True)

    @classmethod
    def u(cls) -> RationalFunction:
        return cls(UPoly([0, 0, 1]), _reduced=True)

    @classmethod
    def from_u_poly(cls, coeffs) -> RationalFunction:
        """Polynomial in u given by coefficients (constant first)."""
        return cls(UPoly(coeffs).compose_power(2), _reduced=True)

    @staticmethod
    def coerce(x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction, CyclotomicNumber)):
            return RationalFunction.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")

    # -- queries

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.deg() == 0

    def constant(self):
        """The value when the function is constant, else None."""
        if self.den.deg() == 0 and self.num.deg() <= 0:
            return self.num.coeffs[0] if self.num.coeffs else Fraction(0)
        return None

    # -- arithmetic

    def __add__(self, other) -> RationalFunction:
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> RationalFunction:
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RationalFunction:
        return (-self) + other

    def __mul__(self, other) -> RationalFunction:
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            if other == 0:
                return RationalFunction(UPoly())
            return RationalFunction(self.num * other, self.den, _reduced=True)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        # cross-cancel first to keep degrees small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = (self.num.exact_div(g1), other.den.exact_div(g1)) if g1.deg() > 0 else (self.num, other.den)
        n2, d1 = (other.num.exact_div(g2), self.den.exact_div(g2)) if g2.deg() > 0 else (other.num, self.den)
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other) -> RationalFunction:
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> RationalFunction:
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> RationalFunction:
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction(self.num ** e, self.den ** e, _reduced=True)

    def __eq__(self, other) -> bool:
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        num = self.num.render("v")
        if self.den == UPoly([1]):
            return num
        den = self.den.render("v")
        if len(self.num.coeffs) - sum(1 for c in self.num.coeffs if c == 0) > 1:
            num = f"({num})"
        return f"{num}/({den})"

    def __repr__(self) -> str:
        return f"RationalFunction('{self}')"


class HalfPowerValue:
    """
    even + odd * W in the ring obtained by adjoining W with W^2 = w.

    >>> u = RationalFunction.u()
    >>> W = HalfPowerValue.root(u)
    >>> W * W == HalfPowerValue.scalar(u, u)
    True
    """

    __slots__ = ("even", "odd", "w")

    def __init__(self, even, odd, w: RationalFunction):
        self.even = RationalFunction.coerce(even)
        self.odd = RationalFunction.coerce(odd)
        self.w = w

    @classmethod
    def scalar(cls, value, w: RationalFunction) -> HalfPowerValue:
        return cls(value, 0, w)

    @classmethod
    def root(cls, w: RationalFunction) -> HalfPowerValue:
        """The adjoined square root W itself."""
        return cls(0, 1, w)

    def _lift(self, other) -> HalfPowerValue:
        if isinstance(other, HalfPowerValue):
            if other.w != self.w:
                raise ValueError("values live over different square-root extensions")
            return other
        return HalfPowerValue(other, 0, self.w)

    def __add__(self, other) -> HalfPowerValue:
        o = self._lift(other)
        return HalfPowerValue(self.even + o.even, self.odd + o.odd, self.w)

    __radd__ = __add__

    def __neg__(self) -> HalfPowerValue:
        return HalfPowerValue(-self.even, -self.odd, self.w)

    def __sub__(self, other) -> HalfPowerValue:
        return self + (-self._lift(other))

    def __mul__(self, other) -> HalfPowerValue:
        o = self._lift(other)
        even = self.even * o.even + self.odd * o.odd * self.w
        odd = self.even * o.odd + self.odd * o.even
        return HalfPowerValue(even, odd, self.w)

    __rmul__ = __mul__

    def inverse(self) -> HalfPowerValue:
        norm = self.even * self.even - self.odd * self.odd * self.w
        if norm.is_zero():
            raise ZeroDivisionError("non-invertible element of the square-root extension")
        inv = norm.inverse()
        return HalfPowerValue(self.even * inv, -self.odd * inv, self.w)

    def __truediv__(self, other) -> HalfPowerValue:
        return self * self._lift(other).inverse()

    def __pow__(self, e: int) -> HalfPowerValue:
        if e < 0:
            return self.inverse() ** (-e)
        result, base = HalfPowerValue(1, 0, self.w), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def grading(self) -> str:
        """Which W-degrees are populated: 'even', 'odd', 'mixed' or 'zero'."""
        if self.odd.is_zero():
            return "zero" if self.even.is_zero() else "even"
        return "odd" if self.even.is_zero() else "mixed"

    def to_v(self) -> RationalFunction:
        """Identify W with v; only valid when w = u = v^2."""
        if self.w != RationalFunction.u():
            raise ValueError("W can only be identified with v when w = u")
        return self.even + self.odd * RationalFunction.v()

    def __eq__(self, other) -> bool:
        if not isinstance(other, HalfPowerValue):
            other = HalfPowerValue(other, 0, self.w)
        return self.w == other.w and self.even == other.even and self.odd == other.odd

    def __hash__(self) -> int:
        return hash((self.even, self.odd, self.w))

    def __str__(self) -> str:
        if self.odd.is_zero():
            return str(self.even)
        if self.even.is_zero():
            return f"({self.odd})*W"
        return f"{self.even} + ({self.odd})*W"

    def __repr__(self) -> str:
        return f"HalfPowerValue('{self}', w='{self.w}')"
