"""
Link invariants from braid words: the framed invariant Gamma_D, its classical restriction Delta_D, their w = u
specializations vartheta_D and theta_D, and the d = 1 Homflypt and Jones polynomials through the Hecke algebra.

All invariants share one shape: prefactor^{n-1} * W^{eps} * trace, where eps is the exponent sum of the braid and
W is a square root of the rescaling parameter. When W^2 = u the square root is identified with v.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable

from .braids import FramedBraidWord, parse_braid
from .harmonic import esystem_solution, format_subset, shifted_E, sup_split_params
from .hecke import hecke_word, ocneanu_trace
from .scalars import HalfPowerValue, RationalFunction, specialize
from .traces import TraceParams, ctl_condition_value, markov_trace
from .yokonuma import AlgebraContext, AlgebraElement, idempotent, mul_by_generator

KINDS = ("gamma", "delta", "vartheta", "theta", "homflypt", "jones")


@dataclasses.dataclass(frozen=True)
class InvariantValue:
    """A computed invariant: a RationalFunction in v when w = u, else a HalfPowerValue over W^2 = w."""

    kind: str
    d: int
    D: frozenset
    value: object

    def grading(self) -> str:
        if isinstance(self.value, HalfPowerValue):
            return self.value.grading()
        return v_parity(self.value)

    def __str__(self) -> str:
        return str(self.value)


def _poly_parity(coeffs) -> int | None:
    degs = {k % 2 for k, c in enumerate(coeffs) if c != 0}
    return degs.pop() if len(degs) == 1 else None


def v_parity(f: RationalFunction) -> str:
    """
    Parity of the v-degrees of a rational function: 'even', 'odd', 'mixed' or 'zero'.

    >>> v = RationalFunction.v()
    >>> v_parity((v * v + 1) / v), v_parity(v * v + v)
    ('odd', 'mixed')
    """
    if f.is_zero():
        return "zero"
    num, den = _poly_parity(f.num.coeffs), _poly_parity(f.den.coeffs)
    if num is None or den is None:
        return "mixed"
    return "odd" if (num - den) % 2 else "even"


def to_algebra(word: FramedBraidWord, ctx: AlgebraContext) -> AlgebraElement:
    """
    gamma(alpha): t^a times the product of g_i^{+-1}, with g_i^{-1} = g_i + (u^{-1}-1) e_i + (u^{-1}-1) e_i g_i.

    >>> str(to_algebra(parse_braid("n=2: s1^-1"), AlgebraContext(1, 2)))
    '(u^-1 - 1) t(0,0) g(1,2) + (u^-1) t(0,0) g(2,1)'
    """
    if word.n != ctx.n:
        raise ValueError(f"word has {word.n} strands, algebra has {ctx.n}")
    out = ctx.word(word.framings)
    inverses: dict[int, AlgebraElement] = {}
    for letter in word.letters:
        if letter.exponent > 0:
            for _ in range(letter.exponent):
                out = mul_by_generator(out, letter.index)
        else:
            inv = inverses.get(letter.index)
            if inv is None:
                inv = inverses[letter.index] = ctx.g_inv(letter.index)
            for _ in range(-letter.exponent):
                out = out * inv
    return out


def _D(d: int, D: Iterable[int]) -> frozenset:
    D = frozenset(k % d for k in D)
    if not D:
        raise ValueError("D must be a non-empty subset of Z/d")
    return D


def specialized_trace(word: FramedBraidWord, d: int, D: frozenset, z: RationalFunction) -> RationalFunction:
    """tr_D(gamma(alpha)) with x the E-system solution for D."""
    elem = to_algebra(word.reduce_framings(d), AlgebraContext(d, word.n))
    return markov_trace(elem, TraceParams.from_solution(esystem_solution(d, D), z))


def jones_z(D_size: int) -> RationalFunction:
    """z = -1/((u+1)|D|)."""
    return RationalFunction.const(-1) / ((RationalFunction.u() + 1) * D_size)


def _w_equals_u(word: FramedBraidWord, trace_value: RationalFunction, D_size: int) -> RationalFunction:
    v = RationalFunction.v()
    pref = -(RationalFunction.u() + 1) * D_size / v
    return pref ** (word.n - 1) * v ** word.exponent_sum() * trace_value


def rescaling_parameter(z: RationalFunction, E) -> RationalFunction:
    """w = (z + (1-u)E)/(u z)."""
    u = RationalFunction.u()
    return (z + (1 - u) * RationalFunction.coerce(E)) / (u * z)


def _general_w(word: FramedBraidWord, trace_value: RationalFunction, z: RationalFunction, E, D_size: int):
    u = RationalFunction.u()
    w = rescaling_parameter(z, E)
    W = HalfPowerValue.root(w)
    pref = HalfPowerValue.scalar(-(1 - w * u) * D_size / (1 - u), w) / W
    return pref ** (word.n - 1) * W ** word.exponent_sum() * trace_value


def gamma_invariant(
    word: FramedBraidWord | str, d: int, D: Iterable[int], mode: str = "w=u", z: RationalFunction | None = None
) -> InvariantValue:
    """
    Gamma_D(w, u) of the closure of a framed braid.

    mode 'w=u' fixes z = -1/((u+1)|D|), giving vartheta_D as a rational function in v. Mode 'general' takes a
    caller-supplied z and returns a HalfPowerValue over W^2 = w, w = (z + (1-u)E)/(uz) with E = 1/|D|.
    """
    if isinstance(word, str):
        word = parse_braid(word)
    D = _D(d, D)
    if mode == "w=u":
        tr = specialized_trace(word, d, D, jones_z(len(D)))
        return InvariantValue("vartheta", d, D, _w_equals_u(word, tr, len(D)))
    if mode == "general":
        if z is None:
            raise ValueError("general mode needs an explicit z")
        z = RationalFunction.coerce(z)
        tr = specialized_trace(word, d, D, z)
        return InvariantValue("gamma", d, D, _general_w(word, tr, z, Fraction(1, len(D)), len(D)))
    raise ValueError(f"unknown mode {mode!r}")


def delta_invariant(
    word: FramedBraidWord | str, d: int, D: Iterable[int], mode: str = "w=u", z: RationalFunction | None = None
) -> InvariantValue:
    """Delta_D: Gamma_D restricted to classical braids (all framings zero)."""
    if isinstance(word, str):
        word = parse_braid(word, allow_framing=False)
    if not word.is_classical():
        raise ValueError("classical invariants need a braid with all framings zero")
    val = gamma_invariant(word, d, D, mode, z)
    return dataclasses.replace(val, kind="theta" if mode == "w=u" else "delta")


def vartheta(word: FramedBraidWord | str, d: int, D: Iterable[int]) -> InvariantValue:
    return gamma_invariant(word, d, D, "w=u")


def theta(word: FramedBraidWord | str, d: int, D: Iterable[int]) -> InvariantValue:
    return delta_invariant(word, d, D, "w=u")


# -- d = 1 through the Hecke algebra


def homflypt(word: FramedBraidWord | str, zeta: RationalFunction) -> InvariantValue:
    """
    P(lambda, u) = (-(1 - lambda u)/(sqrt(lambda)(1 - u)))^{n-1} sqrt(lambda)^eps tau(pi(alpha)),
    lambda = (1 - u + zeta)/(u zeta), with the Ocneanu trace at the caller's zeta.
    """
    if isinstance(word, str):
        word = parse_braid(word, allow_framing=False)
    if not word.is_classical():
        raise ValueError("Homflypt needs a classical braid")
    zeta = RationalFunction.coerce(zeta)
    tau = ocneanu_trace(hecke_word(word.n, [(l.index, l.exponent) for l in word.letters]))
    tr = specialize(tau, zeta, [])
    u = RationalFunction.u()
    lam = (1 - u + zeta) / (u * zeta)
    W = HalfPowerValue.root(lam)
    pref = HalfPowerValue.scalar(-(1 - lam * u) / (1 - u), lam) / W
    return InvariantValue("homflypt", 1, frozenset({0}), pref ** (word.n - 1) * W ** word.exponent_sum() * tr)


def jones(word: FramedBraidWord | str) -> InvariantValue:
    """
    V = P(u, u): Homflypt at zeta = -1/(u+1), written in v = sqrt(u).

    >>> str(jones("n=2: s1^3"))
    '-v^8 + v^6 + v^2'
    """
    val = homflypt(word, jones_z(1))
    return InvariantValue("jones", 1, frozenset({0}), val.value.to_v())


# -- the CTL-side pipeline


def ctl_invariant(word: FramedBraidWord | str, d: int, D: Iterable[int]) -> RationalFunction:
    """
    The invariant defined from the CTL quotient, computed along its own route.

    E is read off the aggregated sums sum E^{(k)} / sum x_k (or tr(e_1) when those sums vanish), z is the
    non-degenerate root -E/(u+1) of the aggregated condition, the condition is verified to vanish, and the value
    goes through the general-w formula, whose rescaling parameter must come out as u.
    """
    if isinstance(word, str):
        word = parse_braid(word)
    D = _D(d, D)
    sol = esystem_solution(d, D)
    x = sol.x_params()
    ctx = AlgebraContext(d, max(word.n, 2))
    sum_x = sum((sol.x[k] for k in range(d)), 0)
    if sum_x != 0:
        sum_E = sum((shifted_E(sol.x, k) for k in range(d)), 0)
        E = RationalFunction.coerce(sum_E) / RationalFunction.coerce(sum_x)
    else:
        E = specialize(markov_trace(idempotent(ctx, 1, 2)), RationalFunction.const(0), x)
    z = -E / (RationalFunction.u() + 1)
    if specialize(ctl_condition_value(d), z, x):
        raise ArithmeticError("the aggregated CTL condition does not vanish")
    tr = markov_trace(to_algebra(word.reduce_framings(d), AlgebraContext(d, word.n)), TraceParams.specialized(z, x))
    val = _general_w(word, tr, z, E, len(D))
    if val.w != RationalFunction.u():
        raise ArithmeticError("the rescaling parameter is not u")
    return val.to_v()


def ftl_invariant(word: FramedBraidWord | str, d: int, D: Iterable[int]) -> RationalFunction:
    """vartheta_D with the trace parameters taken from the FTL classification (Sup_1 empty, Sup_2 = D)."""
    if isinstance(word, str):
        word = parse_braid(word)
    D = _D(d, D)
    p = sup_split_params(d, (), D)
    elem = to_algebra(word.reduce_framings(d), AlgebraContext(d, word.n))
    tr = markov_trace(elem, TraceParams.from_sup_split(p))
    return _w_equals_u(word, tr, len(D))


def ctl_invariant_equality(word: FramedBraidWord | str, d: int, D: Iterable[int]) -> bool:
    return ctl_invariant(word, d, D) == ftl_invariant(word, d, D)


def describe(kind: str, d: int, D: frozenset) -> str:
    return f"{kind} d={d} D={format_subset(D)}"


__all__ = [
    "InvariantValue",
    "KINDS",
    "ctl_invariant",
    "ctl_invariant_equality",
    "delta_invariant",
    "ftl_invariant",
    "gamma_invariant",
    "homflypt",
    "jones",
    "jones_z",
    "rescaling_parameter",
    "theta",
    "to_algebra",
    "vartheta",
]
