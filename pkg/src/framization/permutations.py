"""
Permutations of {1..n} in one-line notation, with the Coxeter data the algebra needs.

A permutation is stored as the tuple of images ``(w(1), ..., w(n))``. Products are composed right to left,
``(v*w)(j) = v(w(j))``, so right multiplication by s_i swaps the entries in positions i and i+1.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Iterator, Sequence

Images = tuple[int, ...]


def identity_images(n: int) -> Images:
    return tuple(range(1, n + 1))


def images_length(w: Images) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def swap_right(w: Images, i: int) -> Images:
    """Images of w*s_i."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


@functools.lru_cache(maxsize=None)
def images_reduced_word(w: Images) -> tuple[int, ...]:
    """A reduced word for w, peeling off the right descent of smallest index each time."""
    word: list[int] = []
    cur = list(w)
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i + 1)
                break
        else:
            break
    word.reverse()
    return tuple(word)


def images_compose(v: Images, w: Images) -> Images:
    return tuple(v[j - 1] for j in w)


def images_inverse(w: Images) -> Images:
    out = [0] * len(w)
    for pos, img in enumerate(w, start=1):
        out[img - 1] = pos
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class Permutation:
    """
    An element of S_n.

    >>> w = Permutation((2, 3, 1))
    >>> w.length(), w.reduced_word()
    (2, (1, 2))
    >>> Permutation.from_word(3, w.reduced_word()) == w
    True
    """

    images: Images

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(identity_images(n))

    @classmethod
    def simple(cls, n: int, i: int) -> Permutation:
        if not 1 <= i < n:
            raise ValueError(f"s_{i} does not exist in S_{n}")
        return cls(swap_right(identity_images(n), i))

    @classmethod
    def from_word(cls, n: int, word: Sequence[int]) -> Permutation:
        w = identity_images(n)
        for i in word:
            if not 1 <= i < n:
                raise ValueError(f"s_{i} does not exist in S_{n}")
            w = swap_right(w, i)
        return cls(w)

    @classmethod
    def all(cls, n: int) -> Iterator[Permutation]:
        for p in itertools.permutations(range(1, n + 1)):
            yield cls(p)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(images_compose(self.images, other.images))

    def inverse(self) -> Permutation:
        return Permutation(images_inverse(self.images))

    def length(self) -> int:
        """Number of inversions, which is the Coxeter length."""
        return images_length(self.images)

    def reduced_word(self) -> tuple[int, ...]:
        return images_reduced_word(self.images)

    def right_length_increases(self, i: int) -> bool:
        """True iff l(w s_i) = l(w) + 1."""
        if not 1 <= i < self.n:
            raise ValueError(f"s_{i} does not exist in S_{self.n}")
        return self.images[i - 1] < self.images[i]

    def times_simple(self, i: int) -> Permutation:
        return Permutation(swap_right(self.images, i))

    def restrict(self) -> Permutation:
        """Drop the last point; only defined when it is fixed."""
        if self.images[-1] != self.n:
            raise ValueError("last point is not fixed")
        return Permutation(self.images[:-1])

    def extend(self, n: int) -> Permutation:
        return Permutation(self.images + tuple(range(self.n + 1, n + 1)))

    def coset_decompose(self) -> tuple[Permutation, int | None]:
        """
        Factor w in S_{m} as w' * s_{m-1} s_{m-2} ... s_j with w' in S_{m-1} and j = w^{-1}(m).

        Returns (w', j), or (w', None) when w fixes m. Lengths add: l(w) = l(w') + (m - j).

        >>> Permutation((2, 3, 1)).coset_decompose()
        (Permutation(images=(2, 1)), 2)
        """
        m = self.n
        if self.images[-1] == m:
            return Permutation(self.images[:-1]), None
        j = self.images.index(m) + 1
        rest = self.images[: j - 1] + self.images[j:]
        return Permutation(rest), j

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.images)) + ")"
