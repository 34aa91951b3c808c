"""
Sparse polynomials over Q in the trace variables u, z, x_1, ..., x_{d-1}.

A monomial is an exponent tuple ``(e_u, e_z, e_x1, e_x2, ...)`` with trailing zeros stripped, so polynomials built
for different d share one representation. The exponent of u may be negative: inverting the generators g_i brings
in powers of 1/u, and keeping those as Laurent monomials avoids rational functions in the algebra.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Monomial = tuple[int, ...]

U, Z = 0, 1


def _trim(exps: Iterable[int]) -> Monomial:
    e = list(exps)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def variable_name(index: int) -> str:
    if index == U:
        return "u"
    if index == Z:
        return "z"
    return f"x_{index - 1}"


class TracePolynomial:
    """
    An exact polynomial in u (Laurent), z and x_1, ..., x_{d-1} with rational coefficients.

    >>> u, z = TracePolynomial.u(), TracePolynomial.z()
    >>> (u + 1) * z * z
    TracePolynomial('z^2 + u*z^2')
    >>> TracePolynomial.x(0)
    TracePolynomial('1')
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None, _clean: bool = False):
        if terms is None:
            self.terms: dict[Monomial, Fraction] = {}
        elif _clean:
            self.terms = dict(terms)
        else:
            clean: dict[Monomial, Fraction] = {}
            for m, c in terms.items():
                if c:
                    m = _trim(m)
                    c = clean.get(m, 0) + Fraction(c)
                    if c:
                        clean[m] = c
                    else:
                        clean.pop(m, None)
            self.terms = clean
        self._hash = None

    # -- constructors

    @classmethod
    def const(cls, c) -> TracePolynomial:
        c = Fraction(c)
        return cls({(): c}, _clean=True) if c else cls()

    @classmethod
    def u(cls, power: int = 1) -> TracePolynomial:
        return cls({_trim((power,)): Fraction(1)}, _clean=True)

    @classmethod
    def z(cls, power: int = 1) -> TracePolynomial:
        return cls({_trim((0, power)): Fraction(1)}, _clean=True)

    @classmethod
    def x(cls, s: int) -> TracePolynomial:
        """The trace parameter x_s; x_0 is the constant 1."""
        if s == 0:
            return cls.const(1)
        return cls({(0, 0) + (0,) * (s - 1) + (1,): Fraction(1)}, _clean=True)

    @classmethod
    def from_u_coeffs(cls, coeffs: Mapping[int, Fraction]) -> TracePolynomial:
        return cls({_trim((e,)): c for e, c in coeffs.items()})

    # -- queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant(self) -> Fraction | None:
        """The value when the polynomial is a constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        return None

    def num_vars(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def degree(self, var: int) -> int:
        return max((m[var] if var < len(m) else 0 for m in self.terms), default=0)

    def min_degree(self, var: int) -> int:
        return min((m[var] if var < len(m) else 0 for m in self.terms), default=0)

    def only_u(self) -> bool:
        return all(len(m) <= 1 for m in self.terms)

    # -- arithmetic

    def __add__(self, other) -> TracePolynomial:
        if not isinstance(other, TracePolynomial):
            if isinstance(other, (int, Fraction)):
                other = TracePolynomial.const(other)
            else:
                return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s += c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return TracePolynomial(out, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> TracePolynomial:
        return TracePolynomial({m: -c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other) -> TracePolynomial:
        if isinstance(other, (int, Fraction)):
            other = TracePolynomial.const(other)
        if not isinstance(other, TracePolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> TracePolynomial:
        return (-self) + other

    def scale(self, c: Fraction) -> TracePolynomial:
        if not c:
            return TracePolynomial()
        return TracePolynomial({m: v * c for m, v in self.terms.items()}, _clean=True)

    def __mul__(self, other) -> TracePolynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        if not isinstance(other, TracePolynomial):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((mb, cb),) = b.items()
            if not mb:
                return TracePolynomial({m: c * cb for m, c in a.items()}, _clean=True)
            return TracePolynomial({_mono_mul(m, mb): c * cb for m, c in a.items()}, _clean=True)
        out: dict[Monomial, Fraction] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return TracePolynomial({m: c for m, c in out.items() if c}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TracePolynomial:
        if e < 0:
            if len(self.terms) == 1:
                ((m, c),) = self.terms.items()
                if all(k == 0 for k in m[1:]):
                    return TracePolynomial({tuple(-k for k in m): 1 / c})
            raise ValueError("only monomials in u can be inverted")
        result, base = TracePolynomial.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = TracePolynomial.const(other)
        if not isinstance(other, TracePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- rendering

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms by ascending total degree, then lexicographically with u < z < x_1 < ... ranked first."""
        width = self.num_vars()

        def key(item):
            m = item[0] + (0,) * (width - len(item[0]))
            return sum(m), tuple(-e for e in m)

        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                variable_name(i) if e == 1 else f"{variable_name(i)}^{e}" for i, e in enumerate(m) if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        out = []
        for k, (sign, body) in enumerate(parts):
            if k == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"TracePolynomial('{self}')"
