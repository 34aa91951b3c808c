"""
The Iwahori-Hecke algebra H_n(u) and the Ocneanu trace, built independently of the Yokonuma engine.

Products use the left multiplication rule h_i h_w = h_{s_i w} if l(s_i w) > l(w), and u h_{s_i w} + (u-1) h_w
otherwise. This is the d = 1 case of Y_{d,n}(u) computed along a different route, so it serves as a cross-check.
"""
from __future__ import annotations

import functools
from typing import Mapping

from .permutations import Images, identity_images, images_reduced_word
from .scalars import TracePolynomial

ONE = TracePolynomial.const(1)
U = TracePolynomial.u()

HeckeElement = dict[Images, TracePolynomial]


def _swap_values(w: Images, i: int) -> Images:
    """Images of s_i * w: exchange the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def left_generator(elem: Mapping[Images, TracePolynomial], i: int) -> HeckeElement:
    out: HeckeElement = {}

    def add(w, c):
        s = out.get(w)
        s = c if s is None else s + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)

    for w, c in elem.items():
        sw = _swap_values(w, i)
        if w.index(i) < w.index(i + 1):
            add(sw, c)
        else:
            add(sw, c * U)
            add(w, c * (U - 1))
    return out


def hecke_multiply(a: Mapping[Images, TracePolynomial], b: Mapping[Images, TracePolynomial]) -> HeckeElement:
    out: HeckeElement = {}
    for v, c in a.items():
        part: HeckeElement = {w: c * cb for w, cb in b.items()}
        for i in reversed(images_reduced_word(v)):
            part = left_generator(part, i)
        for w, p in part.items():
            s = out.get(w)
            s = p if s is None else s + p
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return out


def hecke_generator(n: int, i: int, inverse: bool = False) -> HeckeElement:
    """h_i, or h_i^{-1} = u^{-1} h_i + (u^{-1} - 1)."""
    w = _swap_values(identity_images(n), i)
    if not inverse:
        return {w: ONE}
    ui = TracePolynomial.u(-1)
    return {w: ui, identity_images(n): ui - 1}


def hecke_word(n: int, letters) -> HeckeElement:
    """Product of generators over (index, exponent) pairs."""
    out: HeckeElement = {identity_images(n): ONE}
    for i, e in letters:
        g = hecke_generator(n, i, inverse=e < 0)
        for _ in range(abs(e)):
            out = hecke_multiply(out, g)
    return out


@functools.lru_cache(maxsize=None)
def _ocneanu_word(w: Images) -> TracePolynomial:
    n = len(w)
    if n == 1:
        return ONE
    if w[-1] == n:
        return _ocneanu_word(w[:-1])
    j = w.index(n) + 1
    head = {w[: j - 1] + w[j:]: ONE}
    tail: HeckeElement = {identity_images(n - 1): ONE}
    for i in range(j, n - 1):
        tail = left_generator(tail, i)
    prod = hecke_multiply(head, tail)
    acc = TracePolynomial()
    for v, c in prod.items():
        acc = acc + c * _ocneanu_word(v)
    return TracePolynomial.z() * acc


def ocneanu_trace(elem: Mapping[Images, TracePolynomial]) -> TracePolynomial:
    """
    tau with tau(1) = 1 and tau(a h_{n-1} b) = zeta tau(a b); zeta is the variable z.

    >>> ocneanu_trace(hecke_word(2, [(1, 2)]))
    TracePolynomial('u - z + u*z')
    """
    acc = TracePolynomial()
    for w, c in elem.items():
        acc = acc + c * _ocneanu_word(w)
    return acc
