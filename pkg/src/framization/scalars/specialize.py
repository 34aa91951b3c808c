"""Substitution of concrete values for the trace variables."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cyclotomic import CyclotomicNumber
from .polynomial import TracePolynomial
from .ratfunc import RationalFunction
from .upoly import UPoly


def specialize(p: TracePolynomial, z_value, x_values: Sequence, memo: dict | None = None) -> RationalFunction:
    """
    Evaluate ``p`` at u = v^2, z = z_value and x_s = x_values[s-1].

    The x values may be rationals, cyclotomic numbers or rational functions in v. All terms are brought over one
    common denominator and reduced once at the end. Callers evaluating many polynomials at the same point may pass
    a ``memo`` dict, which then keeps the products of powers of the substituted values between calls.

    >>> z = TracePolynomial.z()
    >>> specialize(z, RationalFunction.const(-1) / (RationalFunction.u() + 1), [])
    RationalFunction('-1/(v^2 + 1)')
    """
    if memo is None:
        memo = {}
    values = memo.get("values")
    if values is None:
        values = [RationalFunction.coerce(z_value)] + [RationalFunction.coerce(x) for x in x_values]
        memo["values"] = values
    width = p.num_vars()
    if width - 1 > len(values):
        raise ValueError(f"polynomial uses x_{width - 2} but only {len(x_values)} x values were given")
    if p.is_zero():
        return RationalFunction(UPoly())

    lo_u = min(p.min_degree(0), 0)
    hi = [p.degree(var) for var in range(1, width)]

    # power tables (num^k, den^(hi-k)) per variable
    def power(var: int, which: str, k: int) -> UPoly:
        key = (var, which, k)
        if key not in memo:
            val = values[var - 1]
            memo[key] = UPoly([1]) if k == 0 else power(var, which, k - 1) * (val.num if which == "num" else val.den)
        return memo[key]

    def factor(exps: tuple) -> UPoly:
        """prod_var num_var^e * den_var^(top - e), shared across calls with the same exponents and degrees."""
        key = ("factor", exps, tuple(hi))
        if key not in memo:
            out = UPoly([1])
            for var, (e, top) in enumerate(zip(exps, hi), start=1):
                if e or top:
                    out = out * power(var, "num", e) * power(var, "den", top - e)
            memo[key] = out
        return memo[key]

    grouped: dict[tuple, dict[int, Fraction]] = {}
    for mono, c in p.terms.items():
        rest = mono[1:]
        e_u = mono[0] if mono else 0
        grouped.setdefault(rest, {})
        grouped[rest][e_u] = grouped[rest].get(e_u, 0) + c

    total = UPoly()
    for rest, u_coeffs in grouped.items():
        # u-part as a polynomial in v, shifted so that negative powers of u become a common v^(-2 lo_u) denominator
        top_u = max(u_coeffs)
        upart = [0] * (2 * (top_u - lo_u) + 1)
        for e, c in u_coeffs.items():
            upart[2 * (e - lo_u)] = c
        exps = tuple(rest[k] if k < len(rest) else 0 for k in range(len(hi)))
        total = total + UPoly(upart) * factor(exps)

    den = UPoly.monomial(-2 * lo_u)
    for var, top in enumerate(hi, start=1):
        den = den * power(var, "den", top)
    return RationalFunction(total, den)


def x_vector(values: Sequence) -> list:
    """Drop the x_0 = 1 entry of a full length-d parameter vector."""
    if values and values[0] != 1:
        raise ValueError("the trace parameter x_0 must equal 1")
    return list(values[1:])


__all__ = ["specialize", "x_vector", "CyclotomicNumber"]
