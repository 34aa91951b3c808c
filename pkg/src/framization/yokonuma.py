"""
The Yokonuma-Hecke algebra Y_{d,n}(u) in its standard basis t_1^{a_1} ... t_n^{a_n} g_w.

Elements are finitely supported maps from basis words to trace polynomials. Every product is reduced to normal form
by right multiplication with single generators:

* framing:   t^a g_w * t_j^k = t^{a + k e_{w(j)}} g_w, since g_w t_j = t_{w(j)} g_w;
* braiding:  t^a g_w * g_i = t^a g_{w s_i} when w(i) < w(i+1), and otherwise, writing w = w' s_i,
             t^a g_{w'} g_i^2 = t^a (g_{w s_i} + (u-1) e_{p,q} g_{w s_i} + (u-1) e_{p,q} g_w)
             with p = w(i+1), q = w(i), because g_{w'} e_i = e_{w'(i), w'(i+1)} g_{w'}.

Each idempotent e_{p,q} = (1/d) sum_s t_p^s t_q^{-s} is expanded on the spot, so coefficients stay polynomial.
"""
from __future__ import annotations

import dataclasses
import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

from .permutations import Images, Permutation, identity_images, images_reduced_word, swap_right
from .scalars import TracePolynomial

ONE = TracePolynomial.const(1)


class BasisWord(NamedTuple):
    """t_1^{a_1} ... t_n^{a_n} g_w; framings are reduced mod d, perm is in one-line notation."""

    framings: tuple[int, ...]
    perm: Images

    def __str__(self) -> str:
        return f"t({','.join(map(str, self.framings))}) g({','.join(map(str, self.perm))})"


@dataclasses.dataclass(frozen=True)
class AlgebraContext:
    """Fixes the framing modulus d and the number of strands n."""

    d: int
    n: int

    def __post_init__(self):
        if self.d < 1 or self.n < 1:
            raise ValueError(f"need d >= 1 and n >= 1, got d={self.d}, n={self.n}")

    @property
    def dimension(self) -> int:
        return self.d ** self.n * _factorial(self.n)

    def _check_strand(self, j: int) -> None:
        if not 1 <= j <= self.n:
            raise IndexError(f"strand index {j} out of range 1..{self.n}")

    def _check_gen(self, i: int) -> None:
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"generator index {i} out of range 1..{self.n - 1}")

    # -- elements

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def scalar(self, c) -> AlgebraElement:
        c = _coerce(c)
        if not c:
            return self.zero()
        return AlgebraElement(self, {BasisWord((0,) * self.n, identity_images(self.n)): c})

    def one(self) -> AlgebraElement:
        return self.scalar(1)

    def word(self, framings, perm=None, coeff=1) -> AlgebraElement:
        framings = tuple(a % self.d for a in framings)
        if len(framings) != self.n:
            raise ValueError(f"framing vector must have length {self.n}")
        perm = identity_images(self.n) if perm is None else tuple(getattr(perm, "images", perm))
        Permutation(perm)
        c = _coerce(coeff)
        return AlgebraElement(self, {BasisWord(framings, perm): c} if c else {})

    def t(self, j: int, k: int = 1) -> AlgebraElement:
        self._check_strand(j)
        a = [0] * self.n
        a[j - 1] = k
        return self.word(a)

    def g(self, i: int) -> AlgebraElement:
        self._check_gen(i)
        return self.word((0,) * self.n, swap_right(identity_images(self.n), i))

    def g_inv(self, i: int) -> AlgebraElement:
        """g_i^{-1} = g_i + (u^{-1} - 1) e_i + (u^{-1} - 1) e_i g_i."""
        c = TracePolynomial.u(-1) - 1
        e = idempotent(self, i, i + 1)
        return self.g(i) + e * c + (e * self.g(i)) * c

    def gens_word(self, letters: Iterable[int]) -> AlgebraElement:
        """Product of g_i over a sequence of indices; negative indices stand for inverses."""
        out = self.one()
        for i in letters:
            out = mul_by_generator(out, i) if i > 0 else out * self.g_inv(-i)
        return out

    def basis(self) -> Iterator[BasisWord]:
        for a in itertools.product(range(self.d), repeat=self.n):
            for p in itertools.permutations(range(1, self.n + 1)):
                yield BasisWord(a, p)

    def basis_element(self, w: BasisWord) -> AlgebraElement:
        return AlgebraElement(self, {w: ONE})

    def embed(self, elem: AlgebraElement) -> AlgebraElement:
        """Include an element of Y_{d,m}, m <= n, into this context."""
        if elem.context.d != self.d or elem.context.n > self.n:
            raise ValueError("cannot embed across these contexts")
        pad = self.n - elem.context.n
        ext = tuple(range(elem.context.n + 1, self.n + 1))
        return AlgebraElement(
            self, {BasisWord(w.framings + (0,) * pad, w.perm + ext): c for w, c in elem.terms.items()}
        )


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _coerce(c) -> TracePolynomial:
    if isinstance(c, TracePolynomial):
        return c
    return TracePolynomial.const(c)


class AlgebraElement:
    """A linear combination of standard basis words with trace-polynomial coefficients."""

    __slots__ = ("context", "terms")

    def __init__(self, context: AlgebraContext, terms: Mapping[BasisWord, TracePolynomial]):
        self.context = context
        self.terms: dict[BasisWord, TracePolynomial] = {w: c for w, c in terms.items() if c}

    @property
    def d(self) -> int:
        return self.context.d

    @property
    def n(self) -> int:
        return self.context.n

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def _same(self, other: AlgebraElement) -> None:
        if self.context != other.context:
            raise ValueError(f"context mismatch: {self.context} vs {other.context}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            other = self.context.scalar(other)
        self._same(other)
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return AlgebraElement(self.context, out)

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.context, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            other = self.context.scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> AlgebraElement:
        return (-self) + other

    def scale(self, c) -> AlgebraElement:
        c = _coerce(c)
        return AlgebraElement(self.context, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, TracePolynomial)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> AlgebraElement:
        if isinstance(other, (int, Fraction, TracePolynomial)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> AlgebraElement:
        out = self.context.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[BasisWord, TracePolynomial]]:
        return sorted(self.terms.items(), key=lambda item: (item[0].framings, item[0].perm))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) {w}" for w, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"AlgebraElement(d={self.d}, n={self.n}, {self})"


def _accumulate(out: dict, terms: Mapping) -> None:
    for w, c in terms.items():
        prev = out.get(w)
        if prev is None:
            out[w] = c
        else:
            s = prev + c
            if s:
                out[w] = s
            else:
                del out[w]


# -- right multiplication primitives


def _right_framing_terms(terms: Mapping[BasisWord, TracePolynomial], j: int, k: int, d: int) -> dict:
    k %= d
    if k == 0:
        return dict(terms)
    out: dict[BasisWord, TracePolynomial] = {}
    for (a, w), c in terms.items():
        pos = w[j - 1] - 1
        b = list(a)
        b[pos] = (b[pos] + k) % d
        out[BasisWord(tuple(b), w)] = c
    return out


def mul_by_framing(elem: AlgebraElement, j: int, k: int) -> AlgebraElement:
    """Right-multiply by t_j^k."""
    elem.context._check_strand(j)
    return AlgebraElement(elem.context, _right_framing_terms(elem.terms, j, k, elem.d))


def _um1_over(d: int) -> TracePolynomial:
    return (TracePolynomial.u() - 1).scale(Fraction(1, d))


def _right_generator_terms(terms: Mapping[BasisWord, TracePolynomial], i: int, d: int) -> dict:
    coef = _um1_over(d)
    out: dict[BasisWord, TracePolynomial] = {}
    for (a, w), c in terms.items():
        ws = swap_right(w, i)
        if w[i - 1] < w[i]:
            _accumulate(out, {BasisWord(a, ws): c})
            continue
        _accumulate(out, {BasisWord(a, ws): c})
        p, q = w[i] - 1, w[i - 1] - 1
        cc = c * coef
        for s in range(d):
            b = list(a)
            b[p] = (b[p] + s) % d
            b[q] = (b[q] - s) % d
            b = tuple(b)
            _accumulate(out, {BasisWord(b, ws): cc, BasisWord(b, w): cc})
    return out


def mul_by_generator(elem: AlgebraElement, i: int) -> AlgebraElement:
    """Right-multiply by g_i."""
    elem.context._check_gen(i)
    return AlgebraElement(elem.context, _right_generator_terms(elem.terms, i, elem.d))


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """The product a*b, reducing b term by term to right multiplications."""
    a._same(b)
    ctx = a.context
    d = ctx.d
    by_perm: dict[Images, list[tuple[tuple[int, ...], TracePolynomial]]] = {}
    for (f, v), c in b.terms.items():
        by_perm.setdefault(v, []).append((f, c))
    out: dict[BasisWord, TracePolynomial] = {}
    for v, framed in by_perm.items():
        acc: dict[BasisWord, TracePolynomial] = {}
        for f, c in framed:
            for (fa, w), ca in a.terms.items():
                new = list(fa)
                for j, k in enumerate(f):
                    if k:
                        pos = w[j] - 1
                        new[pos] = (new[pos] + k) % d
                _accumulate(acc, {BasisWord(tuple(new), w): ca * c})
        for i in images_reduced_word(v):
            acc = _right_generator_terms(acc, i, d)
        _accumulate(out, acc)
    return AlgebraElement(ctx, out)


# -- distinguished elements


def idempotent(ctx: AlgebraContext, i: int, j: int) -> AlgebraElement:
    """e_{i,j} = (1/d) sum_s t_i^s t_j^{-s}."""
    ctx._check_strand(i)
    ctx._check_strand(j)
    if i == j:
        raise ValueError("e_{i,j} needs distinct strands")
    out: dict[BasisWord, TracePolynomial] = {}
    c = TracePolynomial.const(Fraction(1, ctx.d))
    ident = identity_images(ctx.n)
    for s in range(ctx.d):
        a = [0] * ctx.n
        a[i - 1] = s % ctx.d
        a[j - 1] = (-s) % ctx.d
        _accumulate(out, {BasisWord(tuple(a), ident): c})
    return AlgebraElement(ctx, out)


def shifted_idempotent(ctx: AlgebraContext, i: int, m: int) -> AlgebraElement:
    """e_i^{(m)} = t_i^m e_i."""
    ctx._check_gen(i)
    return ctx.t(i, m) * idempotent(ctx, i, i + 1)


def _local_perms(ctx: AlgebraContext, i: int) -> list[Images]:
    """The six elements of <s_i, s_{i+1}> inside S_n."""
    ident = identity_images(ctx.n)
    out = []
    for word in [(), (i,), (i + 1,), (i, i + 1), (i + 1, i), (i, i + 1, i)]:
        w = ident
        for k in word:
            w = swap_right(w, k)
        out.append(w)
    return out


def _need_three(ctx: AlgebraContext, i: int = 1) -> None:
    if ctx.n < 3:
        raise ValueError(f"Steinberg elements need n >= 3, got n={ctx.n}")
    if not 1 <= i <= ctx.n - 2:
        raise IndexError(f"Steinberg index {i} out of range 1..{ctx.n - 2}")


def steinberg_g(ctx: AlgebraContext, i: int = 1) -> AlgebraElement:
    """g_{i,i+1}: the sum of g_w over w in <s_i, s_{i+1}>."""
    _need_three(ctx, i)
    zero = (0,) * ctx.n
    return AlgebraElement(ctx, {BasisWord(zero, w): ONE for w in _local_perms(ctx, i)})


def steinberg_group_sum(ctx: AlgebraContext, kind: str, i: int = 1) -> AlgebraElement:
    """
    The plain group sums over H_{i,i+1} (kind 'r') or C_{i,i+1} (kind 'c'), every coefficient 1.

    These equal d^2 times the normalized elements returned by steinberg_elements.
    """
    _need_three(ctx, i)
    d = ctx.d
    out: dict[BasisWord, TracePolynomial] = {}
    if kind == "r":
        triples = [(a, (b - a) % d, (-b) % d) for a in range(d) for b in range(d)]
    elif kind == "c":
        triples = list(itertools.product(range(d), repeat=3))
    elif kind == "g":
        triples = [(0, 0, 0)]
    else:
        raise ValueError(f"unknown Steinberg kind {kind!r}")
    for tr in triples:
        a = [0] * ctx.n
        a[i - 1 : i + 2] = tr
        for w in _local_perms(ctx, i):
            out[BasisWord(tuple(a), w)] = ONE
    return AlgebraElement(ctx, out)


def framing_sum(ctx: AlgebraContext, j: int) -> AlgebraElement:
    """sum_k t_j^k."""
    out = ctx.zero()
    for k in range(ctx.d):
        out = out + ctx.t(j, k)
    return out


def steinberg_elements(ctx: AlgebraContext) -> tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
    """(g_{1,2}, r_{1,2}, c_{1,2}) with r_{1,2} = e_1 e_2 g_{1,2} and c_{1,2} = (sum_k t_1^k) r_{1,2}."""
    _need_three(ctx)
    g12 = steinberg_g(ctx)
    r12 = idempotent(ctx, 1, 2) * idempotent(ctx, 2, 3) * g12
    c12 = framing_sum(ctx, 1) * r12
    return g12, r12, c12


def steinberg_at(ctx: AlgebraContext, kind: str, i: int) -> AlgebraElement:
    """Normalized g/r/c element at position i, built directly from the local group sum."""
    if kind == "g":
        return steinberg_g(ctx, i)
    return steinberg_group_sum(ctx, kind, i).scale(Fraction(1, ctx.d ** 2))


def conjugate_steinberg(ctx: AlgebraContext, i: int, kind: str = "r") -> AlgebraElement:
    """gamma^{i-1} X_{1,2} gamma^{-(i-1)} with gamma = g_1 ... g_{n-1}; equals X_{i,i+1}."""
    _need_three(ctx, i)
    g12, r12, c12 = steinberg_elements(ctx)
    x = {"g": g12, "r": r12, "c": c12}[kind]
    gamma = ctx.gens_word(range(1, ctx.n))
    gamma_inv = ctx.gens_word(range(-(ctx.n - 1), 0))
    for _ in range(i - 1):
        x = gamma * x * gamma_inv
    return x


def ell_generator(ctx: AlgebraContext, i: int) -> AlgebraElement:
    """
    (u+1) * l_i = g_i + 1.

    The non-invertible generator l_i itself carries the coefficient 1/(u+1), which is not a polynomial; callers
    work with this numerator and clear powers of (u+1) from both sides of a relation.
    """
    ctx._check_gen(i)
    return ctx.g(i) + 1
