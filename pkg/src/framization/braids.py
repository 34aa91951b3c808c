"""
Framed braid words and their text syntax.

Grammar::

    word    := "n=" INT ":" letter*
    letter  := ("s" | "t") INT ["^" ["-"] INT]

``s<i>^e`` is sigma_i^e; ``t<j>^k`` is a framing on strand j. A framing letter written after braid letters is moved
to the front through the relation sigma t_j = t_{s(j)} sigma, so every word normalizes to t^a * sigma-word.
"""
from __future__ import annotations

import dataclasses
import random
import re
from typing import Sequence

from .permutations import identity_images, swap_right


class BraidSyntaxError(ValueError):
    """A malformed braid word; ``position`` is the 0-based character offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclasses.dataclass(frozen=True)
class BraidLetter:
    index: int
    exponent: int

    def __post_init__(self):
        if self.exponent == 0:
            raise ValueError("braid letter exponent must be nonzero")
        if self.index < 1:
            raise ValueError("braid letter index must be positive")

    def __str__(self) -> str:
        return f"s{self.index}" if self.exponent == 1 else f"s{self.index}^{self.exponent}"


@dataclasses.dataclass(frozen=True)
class FramedBraidWord:
    """
    t_1^{a_1} ... t_n^{a_n} times a product of braid letters.

    >>> w = parse_braid("n=3: t1^2 s1 s2^-1")
    >>> w.framings, w.exponent_sum(), str(w)
    ((2, 0, 0), 0, 'n=3: t1^2 s1 s2^-1')
    """

    n: int
    framings: tuple[int, ...]
    letters: tuple[BraidLetter, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a braid needs at least one strand")
        if len(self.framings) != self.n:
            raise ValueError(f"framing vector must have length {self.n}")
        for l in self.letters:
            if l.index >= self.n:
                raise ValueError(f"s{l.index} does not exist on {self.n} strands")

    @classmethod
    def classical(cls, n: int, letters: Sequence[tuple[int, int]]) -> FramedBraidWord:
        return cls(n, (0,) * n, tuple(BraidLetter(i, e) for i, e in letters))

    def exponent_sum(self) -> int:
        return sum(l.exponent for l in self.letters)

    def is_classical(self) -> bool:
        return not any(self.framings)

    def permutation(self) -> tuple[int, ...]:
        w = identity_images(self.n)
        for l in self.letters:
            if l.exponent % 2:
                w = swap_right(w, l.index)
        return w

    def reduce_framings(self, d: int) -> FramedBraidWord:
        return FramedBraidWord(self.n, tuple(a % d for a in self.framings), self.letters)

    def __mul__(self, other: FramedBraidWord) -> FramedBraidWord:
        """Concatenation; the framing of `other` is pushed through this word's braid part."""
        if self.n != other.n:
            raise ValueError("strand counts differ")
        w = self.permutation()
        fr = list(self.framings)
        for j, a in enumerate(other.framings, start=1):
            fr[w[j - 1] - 1] += a
        return FramedBraidWord(self.n, tuple(fr), self.letters + other.letters)

    def inverse(self) -> FramedBraidWord:
        inv_letters = tuple(BraidLetter(l.index, -l.exponent) for l in reversed(self.letters))
        bare = FramedBraidWord(self.n, (0,) * self.n, inv_letters)
        framing = FramedBraidWord(self.n, tuple(-a for a in self.framings), ())
        return bare * framing

    def stabilize(self, sign: int = 1) -> FramedBraidWord:
        """Add a strand and append sigma_n^{+-1}."""
        return FramedBraidWord(self.n + 1, self.framings + (0,), self.letters + (BraidLetter(self.n, sign),))

    def __str__(self) -> str:
        parts = [f"t{j}" if a == 1 else f"t{j}^{a}" for j, a in enumerate(self.framings, start=1) if a]
        parts += [str(l) for l in self.letters]
        return f"n={self.n}:" + "".join(" " + p for p in parts)


_HEADER = re.compile(r"\s*n\s*=\s*(\d+)\s*:")
_LETTER = re.compile(r"([st])(\d+)(?:\^(-?\d+))?")


def parse_braid(text: str, allow_framing: bool = True) -> FramedBraidWord:
    """
    Parse the text form of a (framed) braid word.

    >>> parse_braid("n=2: s1^3").exponent_sum()
    3
    >>> parse_braid("n=2: s2")
    Traceback (most recent call last):
    ...
    framization.braids.BraidSyntaxError: s2 does not exist on 2 strands (at position 5)
    """
    m = _HEADER.match(text)
    if not m:
        raise BraidSyntaxError("expected header 'n=<strands>:'", 0)
    n = int(m.group(1))
    if n < 1:
        raise BraidSyntaxError("a braid needs at least one strand", m.start(1))
    pos = m.end()
    framings = [0] * n
    letters: list[BraidLetter] = []
    perm = identity_images(n)
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        lm = _LETTER.match(text, pos)
        if not lm:
            raise BraidSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind, idx, exp = lm.group(1), int(lm.group(2)), int(lm.group(3) or 1)
        if lm.end() < len(text) and not text[lm.end()].isspace():
            raise BraidSyntaxError(f"unexpected character {text[lm.end()]!r}", lm.end())
        if kind == "s":
            if not 1 <= idx < n:
                raise BraidSyntaxError(f"s{idx} does not exist on {n} strands", pos)
            if exp == 0:
                raise BraidSyntaxError("braid exponent must be nonzero", pos)
            letters.append(BraidLetter(idx, exp))
            if exp % 2:
                perm = swap_right(perm, idx)
        else:
            if not allow_framing:
                raise BraidSyntaxError("framing letters are not allowed for classical invariants", pos)
            if not 1 <= idx <= n:
                raise BraidSyntaxError(f"t{idx} does not exist on {n} strands", pos)
            framings[perm[idx - 1] - 1] += exp
        pos = lm.end()
    return FramedBraidWord(n, tuple(framings), tuple(letters))


def random_braid(rng: random.Random, n: int, length: int, d: int = 1) -> FramedBraidWord:
    """A random word with letters sigma_i^{+-1} and, when d > 1, random framings mod d."""
    letters = tuple(BraidLetter(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)) if n > 1 else ()
    framings = tuple(rng.randrange(d) for _ in range(n)) if d > 1 else (0,) * n
    return FramedBraidWord(n, framings, letters)
