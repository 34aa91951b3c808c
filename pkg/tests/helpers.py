from __future__ import annotations

import random

from framization.scalars import TracePolynomial
from framization.yokonuma import AlgebraContext, AlgebraElement, BasisWord
from framization.permutations import Permutation


def random_coefficient(rng: random.Random) -> TracePolynomial:
    c = TracePolynomial.const(rng.randint(-3, 3) or 1)
    if rng.random() < 0.4:
        c = c + TracePolynomial.u(rng.choice((1, -1, 2)))
    return c


def random_element(ctx: AlgebraContext, rng: random.Random, terms: int = 3) -> AlgebraElement:
    perms = [p.images for p in Permutation.all(ctx.n)]
    out = {}
    for _ in range(terms):
        w = BasisWord(tuple(rng.randrange(ctx.d) for _ in range(ctx.n)), rng.choice(perms))
        out[w] = random_coefficient(rng)
    return AlgebraElement(ctx, out)
