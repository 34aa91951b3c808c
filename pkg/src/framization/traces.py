"""
The Markov trace on Y_{d,n}(u), the closed-form trace values around the Steinberg elements, the pass-to-quotient
checks for FTL, CTL and YTL, and quotient dimensions.

The trace of a standard word t^a g_w is computed by contracting the last strand. If w fixes n, the word is
(t^{a'} g_{w'}) t_n^{a_n} and its trace is x_{a_n} tr(t^{a'} g_{w'}). Otherwise w = w' s_{n-1} ... s_j with w'
fixing n, and

    t^a g_w = m g_{n-1} b,    m = t^{a'} g_{w'},    b = t_{n-1}^{a_n} g_{n-2} ... g_j,

with m, b in Y_{d,n-1}, so tr(t^a g_w) = z tr(m b). The product m b is reduced by the multiplication engine and the
recursion continues one strand down. Word traces are memoized per (d, framing, permutation).
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
import json
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .harmonic import ESystemSolution, SupSplitParams
from .linalg import EchelonSpan, bareiss_rank, element_to_vector
from .scalars import RationalFunction, TracePolynomial, specialize
from .yokonuma import (
    AlgebraContext,
    AlgebraElement,
    BasisWord,
    _right_framing_terms,
    _right_generator_terms,
    idempotent,
    mul_by_framing,
    mul_by_generator,
    shifted_idempotent,
    steinberg_elements,
)

U = TracePolynomial.u()
Z = TracePolynomial.z()


@dataclasses.dataclass(frozen=True)
class TraceParams:
    """
    Symbolic (z, x_s kept as variables) or specialized (z a rational function in v, x_1..x_{d-1} given).

    Specialized x values may be rationals, cyclotomic numbers or rational functions in v.
    """

    z: RationalFunction | None = None
    x: tuple = ()
    _memo: dict = dataclasses.field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def symbolic(self) -> bool:
        return self.z is None

    @classmethod
    def specialized(cls, z, x: Sequence = ()) -> TraceParams:
        return cls(RationalFunction.coerce(z), tuple(x))

    @classmethod
    def from_solution(cls, sol: ESystemSolution, z) -> TraceParams:
        return cls.specialized(z, sol.x_params())

    @classmethod
    def from_sup_split(cls, p: SupSplitParams) -> TraceParams:
        return cls.specialized(p.z, p.x_params())

    def full_x(self) -> list:
        """(x_0, x_1, ..., x_{d-1}) with x_0 = 1."""
        return [Fraction(1)] + list(self.x)

    def evaluate(self, p: TracePolynomial):
        if self.symbolic:
            return p
        return specialize(p, self.z, self.x, self._memo)


SYMBOLIC = TraceParams()


# -- the trace


@functools.lru_cache(maxsize=None)
def _trace_word(d: int, a: tuple[int, ...], w: tuple[int, ...]) -> TracePolynomial:
    n = len(w)
    if n == 1:
        return TracePolynomial.x(a[0])
    if w[-1] == n:
        return TracePolynomial.x(a[-1]) * _trace_word(d, a[:-1], w[:-1])
    j = w.index(n) + 1
    terms = {BasisWord(a[:-1], w[: j - 1] + w[j:]): TracePolynomial.const(1)}
    terms = _right_framing_terms(terms, n - 1, a[-1], d)
    for i in range(n - 2, j - 1, -1):
        terms = _right_generator_terms(terms, i, d)
    acc = TracePolynomial()
    for (b, v), c in terms.items():
        acc = acc + c * _trace_word(d, b, v)
    return Z * acc


def trace_word(d: int, word: BasisWord) -> TracePolynomial:
    return _trace_word(d, tuple(word.framings), tuple(word.perm))


def markov_trace(elem: AlgebraElement, params: TraceParams = SYMBOLIC):
    """
    tr(elem): a TracePolynomial when params are symbolic, otherwise a RationalFunction in v.

    >>> ctx = AlgebraContext(2, 2)
    >>> markov_trace(ctx.g(1))
    TracePolynomial('z')
    >>> markov_trace(idempotent(ctx, 1, 2))
    TracePolynomial('1/2 + 1/2*x_1^2')
    """
    acc = TracePolynomial()
    for w, c in elem.terms.items():
        acc = acc + c * _trace_word(elem.d, w.framings, w.perm)
    return params.evaluate(acc)


# -- closed forms in the trace variables


def x_var(d: int, k: int) -> TracePolynomial:
    return TracePolynomial.x(k % d)


def E_value(d: int, m: int = 0) -> TracePolynomial:
    """E^{(m)} = (1/d) sum_s x_{m+s} x_{-s}; E = E^{(0)}."""
    acc = TracePolynomial()
    for s in range(d):
        acc = acc + x_var(d, m + s) * x_var(d, -s)
    return acc.scale(Fraction(1, d))


def triple_value(d: int, k: int) -> TracePolynomial:
    """(1/d^2)(x*x*x)(k), the closed form of tr(e_1^{(k)} e_2)."""
    acc = TracePolynomial()
    for s in range(d):
        for r in range(d):
            acc = acc + x_var(d, s) * x_var(d, r) * x_var(d, k - s - r)
    return acc.scale(Fraction(1, d * d))


def steinberg_trace_value(d: int, m: int) -> TracePolynomial:
    """(u+1) z^2 x_m + (u+2) z E^{(m)} + tr(e_1^{(m)} e_2)."""
    return (U + 1) * Z * Z * x_var(d, m) + (U + 2) * Z * E_value(d, m) + triple_value(d, m)


def ctl_condition_value(d: int) -> TracePolynomial:
    """(u+1) z^2 sum x_k + (u+2) z sum E^{(k)} + sum tr(e_1^{(k)} e_2), summed over Z/d."""
    acc = TracePolynomial()
    for k in range(d):
        acc = acc + steinberg_trace_value(d, k)
    return acc


def power_trace_formula(m: int, z, E) -> RationalFunction:
    """
    The closed form of tr(g_i^m) when the x_s solve the E-system with E = 1/|D|:

        ((u^m - 1)/(u + 1)) (z + E) + 1    for even m,
        ((u^m + 1)/(u + 1)) (z + E) - E    for odd m.

    At z = -E every even power traces to 1 and every odd power to -E.

    >>> u = RationalFunction.u()
    >>> power_trace_formula(1, -1 / (u + 1), 1)
    RationalFunction('-1/(v^2 + 1)')
    """
    if m < 1:
        raise ValueError("the power must be positive")
    u = RationalFunction.u()
    E = RationalFunction.coerce(E)
    s = RationalFunction.coerce(z) + E
    if m % 2 == 0:
        return (u ** m - 1) / (u + 1) * s + 1
    return (u ** m + 1) / (u + 1) * s - E


# -- the inductive basis


@dataclasses.dataclass(frozen=True)
class InductiveWord:
    """A word of the inductive basis, as letters ('t', j, k) and ('g', i)."""

    letters: tuple

    @property
    def u_power(self) -> int:
        """Number of braiding letters."""
        return sum(1 for l in self.letters if l[0] == "g")

    def framing_total(self, d: int) -> int:
        return sum(l[2] for l in self.letters if l[0] == "t") % d

    def element(self, ctx: AlgebraContext) -> AlgebraElement:
        out = ctx.one()
        for l in self.letters:
            out = mul_by_framing(out, l[1], l[2]) if l[0] == "t" else mul_by_generator(out, l[1])
        return out

    def __str__(self) -> str:
        parts = []
        for l in self.letters:
            if l[0] == "g":
                parts.append(f"g{l[1]}")
            elif l[2]:
                parts.append(f"t{l[1]}" if l[2] == 1 else f"t{l[1]}^{l[2]}")
        return " ".join(parts) or "1"


@functools.lru_cache(maxsize=None)
def inductive_basis(d: int, n: int) -> tuple[InductiveWord, ...]:
    """
    Words m_{n-1} t_n^k and m_{n-1} g_{n-1} ... g_i t_i^k, m_{n-1} running over the basis one strand down.

    >>> len(inductive_basis(2, 3)), str(inductive_basis(2, 3)[-1])
    (48, 't1 g1 t1 g2 g1 t1')
    """
    if n == 1:
        return tuple(InductiveWord((("t", 1, k),)) for k in range(d))
    out = []
    for m in inductive_basis(d, n - 1):
        for k in range(d):
            out.append(InductiveWord(m.letters + (("t", n, k),)))
        for i in range(n - 1, 0, -1):
            chain = tuple(("g", j) for j in range(n - 1, i - 1, -1))
            for k in range(d):
                out.append(InductiveWord(m.letters + chain + (("t", i, k),)))
    return tuple(out)


# -- closed-form checks


@dataclasses.dataclass
class Residual:
    monomial: str
    residual: object

    def to_json(self) -> dict:
        return {"monomial": self.monomial, "residual": str(self.residual)}


def residuals_json(residuals: Iterable[Residual]) -> str:
    return json.dumps([r.to_json() for r in residuals], indent=2)


def lemma8_check(d: int) -> list[Residual]:
    """tr(e_1^{(m)} e_2 g_{1,2}) against its closed form, for every m."""
    ctx = AlgebraContext(d, 3)
    g12, _, _ = steinberg_elements(ctx)
    out = []
    e2 = idempotent(ctx, 2, 3)
    for m in range(d):
        lhs = markov_trace(shifted_idempotent(ctx, 1, m) * e2 * g12)
        diff = lhs - steinberg_trace_value(d, m)
        if diff:
            out.append(Residual(f"e1^({m}) e2 g12", diff))
    return out


def proposition6_check(d: int) -> list[Residual]:
    """tr(m r_{1,2}) = u^p [(u+1) z^2 x_k + (u+2) z E^{(k)} + tr(e_1^{(k)} e_2)], k = a+b+c, p = #g letters."""
    ctx = AlgebraContext(d, 3)
    _, r12, _ = steinberg_elements(ctx)
    out = []
    for word in inductive_basis(d, 3):
        lhs = markov_trace(word.element(ctx) * r12)
        rhs = TracePolynomial.u(word.u_power) * steinberg_trace_value(d, word.framing_total(d))
        if lhs != rhs:
            out.append(Residual(str(word), lhs - rhs))
    return out


def proposition7_check(d: int) -> list[Residual]:
    """tr(m c_{1,2}) = u^p G with G the sum over k of the Steinberg trace values."""
    ctx = AlgebraContext(d, 3)
    _, _, c12 = steinberg_elements(ctx)
    G = ctl_condition_value(d)
    out = []
    for word in inductive_basis(d, 3):
        lhs = markov_trace(word.element(ctx) * c12)
        rhs = TracePolynomial.u(word.u_power) * G
        if lhs != rhs:
            out.append(Residual(str(word), lhs - rhs))
    return out


# -- pass-to-quotient checks


@dataclasses.dataclass
class CheckReport:
    quotient: str
    passed: bool
    residuals: list[Residual]
    closed_form: object = None
    consistent: bool = True
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "quotient": self.quotient,
            "passed": self.passed,
            "residuals": [r.to_json() for r in self.residuals],
        }
        if self.closed_form is not None:
            out["closed_form"] = str(self.closed_form)
            out["consistent"] = self.consistent
        if self.note:
            out["note"] = self.note
        return out


@functools.lru_cache(maxsize=None)
def _generator_traces(d: int, n: int, kind: str) -> tuple[tuple[str, TracePolynomial], ...]:
    """Symbolic tr(m X_{1,2}) for every inductive-basis word m of Y_{d,n}, X one of g, r, c."""
    ctx = AlgebraContext(d, n)
    gens = dict(zip("grc", steinberg_elements(ctx)))
    gen = gens[kind]
    return tuple((str(w), markov_trace(w.element(ctx) * gen)) for w in inductive_basis(d, n))


def _check_params(d: int, params: TraceParams) -> None:
    if params.symbolic:
        raise ValueError("pass-to-quotient checks need specialized parameters")
    if len(params.x) != d - 1:
        raise ValueError(f"expected {d - 1} x values for d={d}, got {len(params.x)}")


def _monomial_residuals(d: int, n: int, kind: str, params: TraceParams) -> list[Residual]:
    out = []
    for label, poly in _generator_traces(d, n, kind):
        val = params.evaluate(poly)
        if val:
            out.append(Residual(label, val))
    return out


def check_ftl_pass(d: int, params: TraceParams, n: int = 3) -> CheckReport:
    """tr(m r_{1,2}) = 0 for every inductive-basis word m of Y_{d,n}; n = 3 already decides all n."""
    _check_params(d, params)
    res = _monomial_residuals(d, n, "r", params)
    return CheckReport("ftl", not res, res)


def check_ctl_pass(d: int, params: TraceParams, n: int = 3) -> CheckReport:
    """The aggregated condition, evaluated in closed form and through tr(m c_{1,2}) over the inductive basis."""
    _check_params(d, params)
    res = _monomial_residuals(d, n, "c", params)
    closed = params.evaluate(ctl_condition_value(d))
    consistent = (not res) == (not closed)
    return CheckReport("ctl", not res and not closed, res, closed_form=closed, consistent=consistent)


def check_ytl_pass(d: int, params: TraceParams, n: int = 3) -> CheckReport:
    """tr(m g_{1,2}) = 0 over the inductive basis; the closed-form classification is attached as a note."""
    _check_params(d, params)
    res = _monomial_residuals(d, n, "g", params)
    return CheckReport("ytl", not res, res, note=ytl_classification(d, params))


def ytl_classification(d: int, params: TraceParams) -> str:
    """Which case of the known YTL classification the x vector matches, reading exp(m l) as chi_m(l)."""
    from .harmonic import esystem_solution

    x = params.full_x()
    for m in range(d):
        if all(esystem_solution(d, [m]).x[k] == x[k] for k in range(d)):
            return f"x is the character chi_{m}"
    for m1, m2 in itertools.combinations(range(d), 2):
        if all(esystem_solution(d, [m1, m2]).x[k] == x[k] for k in range(d)):
            return f"x is (chi_{m1} + chi_{m2})/2"
    return "x matches neither case"


# -- dimensions


@dataclasses.dataclass(frozen=True)
class DimensionReport:
    algebra: str
    d: int
    n: int
    dimension: int
    method: str
    ideal_rank: int | None = None

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def compositions(n: int, parts: int) -> Iterable[tuple[int, ...]]:
    """Ordered tuples of `parts` nonnegative integers summing to n."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def ftl_dimension_formula(d: int, n: int) -> DimensionReport:
    """
    sum over compositions (k_1..k_d) of n of (n!/(k_1!...k_d!))^2 c_{k_1}...c_{k_d}.

    >>> ftl_dimension_formula(2, 3).dimension
    46
    """
    if d < 1 or n < 1:
        raise ValueError("need d, n >= 1")
    total = 0
    for ks in compositions(n, d):
        multinom = math.factorial(n)
        cat = 1
        for k in ks:
            multinom //= math.factorial(k)
            cat *= catalan(k)
        total += multinom * multinom * cat
    return DimensionReport("ftl", d, n, total, "formula")


SIZE_GUARD = 2000
_ALGEBRA_TAG = {"g": "ytl", "r": "ftl", "c": "ctl"}


def _ideal_generator(ctx: AlgebraContext, kind: str) -> AlgebraElement:
    if kind not in _ALGEBRA_TAG:
        raise ValueError(f"generator tag must be one of g, r, c; got {kind!r}")
    return dict(zip("grc", steinberg_elements(ctx)))[kind]


def _guard(d: int, n: int) -> None:
    if n < 3:
        raise ValueError("the ideals are generated by Steinberg elements, which need n >= 3")
    size = d ** n * math.factorial(n)
    if size > SIZE_GUARD:
        raise ValueError(f"d^n n! = {size} exceeds the size guard {SIZE_GUARD}")


@functools.lru_cache(maxsize=8)
def ideal_basis(d: int, n: int, kind: str) -> tuple[AlgebraContext, EchelonSpan, dict]:
    """
    Echelon basis of the two-sided ideal generated by g_{1,2}, r_{1,2} or c_{1,2}.

    Results are cached and shared between callers, so the returned span must not be extended.

    The span is closed under left and right multiplication by every g_i and t_j, which generate the algebra, so
    the closure is exactly the ideal.
    """
    _guard(d, n)
    ctx = AlgebraContext(d, n)
    index = {w: i for i, w in enumerate(sorted(ctx.basis()))}
    span = EchelonSpan()
    gen = _ideal_generator(ctx, kind)
    queue = [gen]
    span.add(element_to_vector(gen, index))
    left = [ctx.g(i) for i in range(1, n)] + [ctx.t(j) for j in range(1, n + 1)]
    while queue:
        x = queue.pop()
        cands = [mul_by_generator(x, i) for i in range(1, n)] + [mul_by_framing(x, j, 1) for j in range(1, n + 1)]
        cands += [a * x for a in left]
        for y in cands:
            if y.terms and span.add(element_to_vector(y, index)):
                queue.append(y)
    return ctx, span, index


def ideal_dimension(d: int, n: int, kind: str = "r", method: str = "closure") -> DimensionReport:
    """
    Quotient dimension d^n n! - rank(ideal), at generic u.

    method 'closure' grows the ideal by multiplication with generators; method 'pairs' ranks the full spanning set
    {a X b : a, b standard words} by fraction-free elimination (quadratically many products, small cases only).
    """
    _guard(d, n)
    total = d ** n * math.factorial(n)
    if method == "closure":
        _, span, _ = ideal_basis(d, n, kind)
        rank = span.rank
    elif method == "pairs":
        ctx = AlgebraContext(d, n)
        index = {w: i for i, w in enumerate(sorted(ctx.basis()))}
        gen = _ideal_generator(ctx, kind)
        words = [ctx.basis_element(w) for w in sorted(ctx.basis())]
        left = [a * gen for a in words]
        rows = [element_to_vector(x * b, index) for x in left for b in words]
        rank = bareiss_rank([r for r in rows if r], total)
    else:
        raise ValueError(f"unknown method {method!r}")
    return DimensionReport(_ALGEBRA_TAG[kind], d, n, total - rank, "rank", ideal_rank=rank)


def ideal_contains(d: int, n: int, kind: str, elem: AlgebraElement) -> bool:
    """Exact membership of elem in the ideal generated by the chosen Steinberg element."""
    ctx, span, index = ideal_basis(d, n, kind)
    if elem.context != ctx:
        raise ValueError("element lives in a different algebra")
    return span.contains(element_to_vector(elem, index))


def algebra_dimension(d: int, n: int) -> DimensionReport:
    return DimensionReport("y", d, n, d ** n * math.factorial(n), "formula")
