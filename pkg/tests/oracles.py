"""Independent reference computations used by the unit tests and the acceptance suite."""
from __future__ import annotations

import itertools

from framization.braids import FramedBraidWord
from framization.scalars import HalfPowerValue, RationalFunction, TracePolynomial, UPoly
from framization.yokonuma import AlgebraContext, idempotent, steinberg_elements

U = RationalFunction.u()
V = RationalFunction.v()
TU = TracePolynomial.u()


def skein_torus(zeta: RationalFunction, k: int) -> HalfPowerValue:
    """
    Homflypt of the closure of sigma_1^k by the skein relation
    (1/(W v)) P_+ - W v P_- = (v - 1/v) P_0, with W^2 = lambda.
    """
    lam = (1 - U + zeta) / (U * zeta)
    W = HalfPowerValue.root(lam)
    a = W * V
    z = HalfPowerValue.scalar(V - 1 / V, lam)
    unlink = HalfPowerValue.scalar(-(1 - lam * U) / (1 - U), lam) / W
    vals = {0: unlink, 1: HalfPowerValue.scalar(1, lam)}
    for j in range(2, k + 1):
        vals[j] = a * (a * vals[j - 2] + z * vals[j - 1])
    for j in range(-1, k - 1, -1):
        # P(j) from P(j+2) = a (a P(j) + z P(j+1))
        vals[j] = (vals[j + 2] / a - z * vals[j + 1]) / a
    return vals[k]


def kauffman_jones(word: FramedBraidWord) -> RationalFunction:
    """
    Jones polynomial of a braid closure by the Kauffman bracket state sum, in v = t^{1/2} with A = v^{-1/2}.

    Each sigma_i^{+-1} is smoothed into the identity or the cup-cap e_i with weights A^{+-1} and A^{-+1}.
    """
    n = word.n
    crossings = []
    for letter in word.letters:
        sign = 1 if letter.exponent > 0 else -1
        crossings += [(letter.index, sign)] * abs(letter.exponent)
    bracket: dict[int, int] = {}
    for state in itertools.product((0, 1), repeat=len(crossings)):
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                x = parent[x]
            return x

        def union(a, b):
            parent[find(a)] = find(b)

        a_power = 0
        for level, ((i, sign), smooth) in enumerate(zip(crossings, state)):
            a_power += sign if smooth == 0 else -sign
            for j in range(1, n + 1):
                if smooth == 1 and j in (i, i + 1):
                    continue
                union((level, j), (level + 1, j))
            if smooth == 1:
                union((level, i), (level, i + 1))
                union((level + 1, i), (level + 1, i + 1))
        top = len(crossings)
        for j in range(1, n + 1):
            union((top, j), (0, j))
            find((top, j))
        loops = len({find(x) for x in list(parent)})
        # delta = -A^2 - A^-2, one loop normalizes to 1
        poly = {a_power: 1}
        for _ in range(loops - 1):
            nxt: dict[int, int] = {}
            for e, c in poly.items():
                nxt[e + 2] = nxt.get(e + 2, 0) - c
                nxt[e - 2] = nxt.get(e - 2, 0) - c
            poly = nxt
        for e, c in poly.items():
            bracket[e] = bracket.get(e, 0) + c
    w = word.exponent_sum()
    sign = -1 if w % 2 else 1
    jones_a = {e - 3 * w: sign * c for e, c in bracket.items() if c}
    # A = v^{-1/2}: A^e = v^{-e/2}, and e is always even after normalization
    assert all(e % 2 == 0 for e in jones_a)
    lo = min(-e // 2 for e in jones_a)
    coeffs = [0] * (max(-e // 2 for e in jones_a) - lo + 1)
    for e, c in jones_a.items():
        coeffs[-e // 2 - lo] += c
    return RationalFunction(UPoly(coeffs), UPoly.monomial(-lo)) if lo < 0 else RationalFunction(UPoly([0] * lo + coeffs))


def lemma1_failures(ctx: AlgebraContext) -> list[str]:
    """The six idempotent relations, checked for every admissible index pair."""
    n, g = ctx.n, ctx.g
    e = lambda i, j: idempotent(ctx, i, j)
    bad = []
    for i in range(1, n):
        for j in range(1, n + 1):
            if ctx.t(j) * e(i, i + 1) != e(i, i + 1) * ctx.t(j):
                bad.append(f"t{j} e{i}")
        for j in range(1, n):
            if j not in (i - 1, i + 1) and e(i, i + 1) * g(j) != g(j) * e(i, i + 1):
                bad.append(f"e{i} g{j}")
            if abs(i - j) == 1 and e(j, j + 1) * g(i) * g(j) != g(i) * g(j) * e(i, i + 1):
                bad.append(f"e{j} g{i} g{j}")
        if i + 2 <= n:
            if e(i + 1, i + 2) * g(i) != g(i) * e(i, i + 2):
                bad.append(f"e{i + 1} g{i}")
            if e(i, i + 1) * e(i + 1, i + 2) != e(i, i + 1) * e(i, i + 2):
                bad.append(f"e{i} e{i + 1} left")
            if e(i, i + 1) * e(i + 1, i + 2) != e(i, i + 2) * e(i + 1, i + 2):
                bad.append(f"e{i} e{i + 1} right")
    return bad


def absorption_failures(ctx: AlgebraContext, kind: str) -> list[str]:
    """g_1, g_2, g_1g_2, g_2g_1 and g_1g_2g_1 acting on a Steinberg element through their idempotent expansions."""
    g1, g2 = ctx.g(1), ctx.g(2)
    e1, e2, e13 = idempotent(ctx, 1, 2), idempotent(ctx, 2, 3), idempotent(ctx, 1, 3)
    one = ctx.one()
    X = dict(zip("grc", steinberg_elements(ctx)))[kind]
    rhs = [
        one + (TU - 1) * e1,
        one + (TU - 1) * e2,
        one + (TU - 1) * e1 + (TU - 1) * e13 + (TU - 1) ** 2 * e1 * e2,
        one + (TU - 1) * e2 + (TU - 1) * e13 + (TU - 1) ** 2 * e1 * e2,
        one + (TU - 1) * (e1 + e2 + e13) + (TU - 1) ** 2 * (TU + 2) * e1 * e2,
    ]
    lhs = [g1, g2, g1 * g2, g2 * g1, g1 * g2 * g1]
    names = ["g1", "g2", "g1g2", "g2g1", "g1g2g1"]
    return [f"{kind}: {name}" for name, left, right in zip(names, lhs, rhs) if left * X != right * X]
