"""
Exact linear algebra over Q[u] for spans of algebra elements.

Vectors are sparse maps from column index to ``UPoly`` in u. Elimination is fraction-free, so ranks are ranks over
the field Q(u) at generic u.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalars import TracePolynomial, UPoly, poly_gcd
from .yokonuma import AlgebraElement, BasisWord

PolyVector = dict[int, UPoly]
_ONE = UPoly([1])


def element_to_vector(elem: AlgebraElement, index: Mapping[BasisWord, int]) -> PolyVector:
    """Coordinates of elem in the standard basis, multiplied by a power of u to clear u^{-1}."""
    lo = 0
    for c in elem.terms.values():
        if not c.only_u():
            raise ValueError("coefficients must be polynomials in u alone")
        lo = min(lo, c.min_degree(0))
    out: PolyVector = {}
    for w, c in elem.terms.items():
        out[index[w]] = _to_upoly(c, -lo)
    return out


def _to_upoly(c: TracePolynomial, shift: int) -> UPoly:
    coeffs: dict[int, Fraction] = {}
    for mono, v in c.terms.items():
        e = (mono[0] if mono else 0) + shift
        coeffs[e] = v
    top = max(coeffs)
    return UPoly([coeffs.get(k, 0) for k in range(top + 1)])


def _content(vec: PolyVector) -> UPoly:
    g = UPoly()
    for p in vec.values():
        g = poly_gcd(g, p) if not g.is_zero() else p.monic()
        if g.deg() == 0:
            return UPoly([1])
    return g


def _primitive(vec: PolyVector) -> PolyVector:
    g = _content(vec)
    lead = vec[min(vec)].lead()
    if g.deg() > 0:
        vec = {k: p.exact_div(g) for k, p in vec.items()}
        lead = vec[min(vec)].lead()
    if lead != 1:
        inv = 1 / lead
        vec = {k: p * inv for k, p in vec.items()}
    return vec


def _combine(a: PolyVector, ca: UPoly, b: PolyVector, cb: UPoly) -> PolyVector:
    """ca*a - cb*b with zero entries dropped."""
    out = {k: p * ca for k, p in a.items()}
    for k, p in b.items():
        q = out.get(k)
        r = -(p * cb) if q is None else q - p * cb
        if r.is_zero():
            out.pop(k, None)
        else:
            out[k] = r
    return out


class EchelonSpan:
    """
    An incrementally grown span kept in fraction-free echelon form, one row per leading column.

    >>> s = EchelonSpan()
    >>> s.add({0: UPoly([1]), 1: UPoly([0, 1])}), s.add({0: UPoly([0, 2]), 1: UPoly([0, 0, 2])})
    (True, False)
    >>> s.rank
    1
    """

    def __init__(self):
        self.rows: dict[int, PolyVector] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: PolyVector) -> PolyVector:
        """Eliminate leading columns until the vector is zero or leads with a fresh column."""
        vec = {k: p for k, p in vec.items() if not p.is_zero()}
        while vec:
            col = min(vec)
            row = self.rows.get(col)
            if row is None:
                return vec
            a, b = row[col], vec[col]
            g = poly_gcd(a, b)
            if g.deg() > 0:
                a, b = a.exact_div(g), b.exact_div(g)
            vec = _combine(vec, a, row, b)
            if vec:
                vec = _primitive(vec)
        return vec

    def add(self, vec: PolyVector) -> bool:
        """Insert vec; returns True iff it was independent of the current span."""
        red = self.reduce(vec)
        if not red:
            return False
        red = _primitive(red)
        self.rows[min(red)] = red
        return True

    def contains(self, vec: PolyVector) -> bool:
        return not self.reduce(vec)


def bareiss_rank(rows: Sequence[Mapping[int, UPoly]], ncols: int | None = None) -> int:
    """
    Rank over Q(u) by fraction-free Gaussian elimination.

    In each column the pivot is the nonzero entry of least degree, ties broken by the lowest row index; every
    division by the previous pivot is exact.

    >>> bareiss_rank([{0: UPoly([1]), 1: UPoly([0, 1])}, {0: UPoly([0, 1]), 1: UPoly([0, 0, 1])}])
    1
    """
    mat = [dict((k, p) for k, p in r.items() if not p.is_zero()) for r in rows]
    cols = sorted({k for r in mat for k in r}) if ncols is None else range(ncols)
    active = list(range(len(mat)))
    prev = _ONE
    rank = 0
    for col in cols:
        cands = [i for i in active if col in mat[i]]
        if not cands:
            continue
        piv = min(cands, key=lambda i: (mat[i][col].deg(), i))
        active.remove(piv)
        prow = mat[piv]
        p = prow[col]
        for i in active:
            row = mat[i]
            f = row.get(col)
            new: dict[int, UPoly] = {}
            keys = set(row) | set(prow)
            for k in keys:
                if k == col:
                    continue
                val = row.get(k, UPoly()) * p
                if f is not None and k in prow:
                    val = val - prow[k] * f
                if not val.is_zero():
                    new[k] = val if prev == _ONE else val.exact_div(prev)
            mat[i] = new
        prev = p
        rank += 1
    return rank


def span_rank(vectors: Iterable[PolyVector]) -> int:
    s = EchelonSpan()
    for v in vectors:
        s.add(v)
    return s.rank
