"""
Harmonic analysis on the cyclic group C_d and the E-system.

A function y: Z/d -> K is identified with sum_k y(k) t^k in the group algebra K[C_d]. Values are exact: rationals,
cyclotomic numbers, or rational functions in v when the parameters depend on u.
"""
from __future__ import annotations

import dataclasses
import itertools
from fractions import Fraction
from typing import Callable, Iterable

from .scalars import CyclotomicNumber, RationalFunction, character_value


def _canon(d: int, value):
    if isinstance(value, (int, Fraction)):
        return CyclotomicNumber(d, [value])
    return value


@dataclasses.dataclass(frozen=True)
class CdFunction:
    """
    A vector (y(0), ..., y(d-1)).

    >>> x = CdFunction.from_values(2, [1, -1])
    >>> convolve(x, x).values == (CdFunction.from_values(2, [2, -2])).values
    True
    """

    d: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.d:
            raise ValueError(f"a function on Z/{self.d} needs {self.d} values, got {len(self.values)}")

    @classmethod
    def from_values(cls, d: int, values: Iterable) -> CdFunction:
        return cls(d, tuple(_canon(d, v) for v in values))

    @classmethod
    def zero(cls, d: int) -> CdFunction:
        return cls.from_values(d, [0] * d)

    def __getitem__(self, k: int):
        return self.values[k % self.d]

    def _same(self, other: CdFunction) -> None:
        if self.d != other.d:
            raise ValueError(f"size mismatch: Z/{self.d} vs Z/{other.d}")

    def __add__(self, other: CdFunction) -> CdFunction:
        self._same(other)
        return CdFunction(self.d, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: CdFunction) -> CdFunction:
        self._same(other)
        return CdFunction(self.d, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, c) -> CdFunction:
        return CdFunction(self.d, tuple(v * c for v in self.values))

    def map(self, f: Callable) -> CdFunction:
        return CdFunction(self.d, tuple(f(v) for v in self.values))

    def reflect(self) -> CdFunction:
        """k -> y(-k)."""
        return CdFunction(self.d, tuple(self[-k] for k in range(self.d)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CdFunction):
            return NotImplemented
        return self.d == other.d and all(a == b for a, b in zip(self.values, other.values))

    def __hash__(self):
        return hash((self.d, self.values))

    def __str__(self) -> str:
        return "[" + ", ".join(str(v) for v in self.values) + "]"


def delta(d: int, a: int) -> CdFunction:
    """delta_a = t^a."""
    return CdFunction.from_values(d, [1 if k == a % d else 0 for k in range(d)])


def iota(d: int, a: int) -> CdFunction:
    """i_a = sum_s chi_a(s) t^s."""
    return CdFunction(d, tuple(character_value(d, a, s) for s in range(d)))


def convolve(y: CdFunction, y2: CdFunction) -> CdFunction:
    """(y * y')(r) = sum_s y(s) y'(r - s)."""
    y._same(y2)
    d = y.d
    out = []
    for r in range(d):
        acc = y.values[0] * y2.values[r]
        for s in range(1, d):
            acc = acc + y.values[s] * y2.values[(r - s) % d]
        out.append(acc)
    return CdFunction(d, tuple(out))


def pointwise(y: CdFunction, y2: CdFunction) -> CdFunction:
    y._same(y2)
    return CdFunction(y.d, tuple(a * b for a, b in zip(y.values, y2.values)))


def fourier(y: CdFunction) -> CdFunction:
    """y^(s) = (y * i_s)(0) = sum_r y(r) chi_s(-r)."""
    d = y.d
    out = []
    for s in range(d):
        acc = y.values[0] * character_value(d, s, 0)
        for r in range(1, d):
            acc = acc + y.values[r] * character_value(d, s, -r)
        out.append(acc)
    return CdFunction(d, tuple(out))


def total(y: CdFunction):
    """The augmentation sum_k y(k)."""
    acc = y.values[0]
    for v in y.values[1:]:
        acc = acc + v
    return acc


# -- the E-system


def shifted_E(x: CdFunction, m: int):
    """E^{(m)} = (1/d) sum_s x_{m+s} x_{-s}, i.e. (1/d)(x*x)(m)."""
    d = x.d
    acc = x[m] * x[0]
    for s in range(1, d):
        acc = acc + x[m + s] * x[-s]
    return acc * Fraction(1, d)


def esystem_verify(x: CdFunction) -> bool:
    """
    True iff E^{(m)} = x_m E for 1 <= m <= d-1.

    >>> esystem_verify(CdFunction.from_values(2, [1, 0]))
    True
    >>> esystem_verify(CdFunction.from_values(2, [1, Fraction(1, 2)]))
    False
    """
    if x[0] != 1:
        raise ValueError("the trace parameter x_0 must equal 1")
    e = shifted_E(x, 0)
    return all(shifted_E(x, m) == x[m] * e for m in range(1, x.d))


@dataclasses.dataclass(frozen=True)
class ESystemSolution:
    """x_D = (1/|D|) sum_{m in D} chi_m, with E = 1/|D|."""

    D: frozenset
    x: CdFunction

    @property
    def E(self) -> Fraction:
        return Fraction(1, len(self.D))

    def x_params(self) -> list:
        """(x_1, ..., x_{d-1}) for specialization."""
        return list(self.x.values[1:])

    def __str__(self) -> str:
        return f"D={format_subset(self.D)}: x={self.x} E=1/{len(self.D)}"


def format_subset(s: Iterable[int]) -> str:
    return "{" + ",".join(str(k) for k in sorted(s)) + "}"


def subsets_by_bitmask(d: int) -> list[frozenset]:
    """Non-empty subsets of Z/d, ordered by bitmask (bit k set iff k in D)."""
    return [frozenset(k for k in range(d) if mask >> k & 1) for mask in range(1, 2 ** d)]


def esystem_solution(d: int, D: Iterable[int]) -> ESystemSolution:
    D = frozenset(k % d for k in D)
    if not D:
        raise ValueError("D must be non-empty")
    vals = []
    for k in range(d):
        acc = CyclotomicNumber(d, [0])
        for m in D:
            acc = acc + character_value(d, m, k)
        vals.append(acc * Fraction(1, len(D)))
    return ESystemSolution(D, CdFunction(d, tuple(vals)))


def solve_esystem(d: int) -> list[ESystemSolution]:
    """
    All 2^d - 1 solutions, one per non-empty D, in bitmask order.

    >>> [str(s.x[1]) for s in solve_esystem(2)]
    ['1', '-1', '0']
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    out = []
    for D in subsets_by_bitmask(d):
        sol = esystem_solution(d, D)
        if not esystem_verify(sol.x):
            raise ArithmeticError(f"E-system solution for D={format_subset(D)} failed verification")
        out.append(sol)
    return out


@dataclasses.dataclass(frozen=True)
class SupSplitParams:
    """
    Trace parameters from a split Sup_1 | Sup_2 of the Fourier support.

    x_k = -z (sum_{m in Sup_1} chi(km) + (u+1) sum_{m in Sup_2} chi(km)),  z = -1/(|Sup_1| + (u+1)|Sup_2|).
    """

    d: int
    sup1: frozenset
    sup2: frozenset
    x: CdFunction
    z: RationalFunction

    def x_params(self) -> list:
        return list(self.x.values[1:])

    def __str__(self) -> str:
        return f"Sup1={format_subset(self.sup1)} Sup2={format_subset(self.sup2)}: z={self.z} x={self.x}"


def sup_split_params(d: int, sup1: Iterable[int], sup2: Iterable[int]) -> SupSplitParams:
    """
    >>> p = sup_split_params(2, [0], [1])
    >>> str(p.z), str(p.x[1])
    ('-1/(v^2 + 2)', '-v^2/(v^2 + 2)')
    """
    s1 = frozenset(k % d for k in sup1)
    s2 = frozenset(k % d for k in sup2)
    if s1 & s2:
        raise ValueError(f"Sup_1 and Sup_2 overlap in {format_subset(s1 & s2)}")
    if not s1 and not s2:
        raise ValueError("Sup_1 and Sup_2 cannot both be empty")
    u1 = RationalFunction.u() + 1
    z = RationalFunction.const(-1) / (u1 * len(s2) + len(s1))
    vals = []
    for k in range(d):
        c1 = sum((character_value(d, k, m) for m in s1), CyclotomicNumber(d, [0]))
        c2 = sum((character_value(d, k, m) for m in s2), CyclotomicNumber(d, [0]))
        vals.append(-z * (u1 * c2 + c1))
    x = CdFunction(d, tuple(vals))
    if x[0] != 1:
        raise ArithmeticError("x_0 != 1 for a Sup split")
    return SupSplitParams(d, s1, s2, x, z)


def disjoint_splits(d: int, max_size: int | None = None) -> list[tuple[frozenset, frozenset]]:
    """Every disjoint pair (Sup_1, Sup_2), not both empty, with |Sup_1| + |Sup_2| <= max_size."""
    max_size = d if max_size is None else max_size
    out = []
    for labels in itertools.product(range(3), repeat=d):
        s1 = frozenset(k for k, c in enumerate(labels) if c == 1)
        s2 = frozenset(k for k, c in enumerate(labels) if c == 2)
        if (s1 or s2) and len(s1) + len(s2) <= max_size:
            out.append((s1, s2))
    return out

