"""Reduced words in the free group F_n and automorphisms given by generator images.

A letter is a nonzero int: ``k`` stands for x_k and ``-k`` for its inverse.
Words are plain tuples of letters, always kept freely reduced.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_WORD_CAP = 10**6
_cap = int(os.environ.get("LEFSCHETZ_WORD_CAP", DEFAULT_WORD_CAP))


class WordLengthError(RuntimeError):
    """An intermediate word exceeded the configured length cap."""


def word_cap() -> int:
    return _cap


def set_word_cap(n: int) -> None:
    global _cap
    if n <= 0:
        raise ValueError("word cap must be positive")
    _cap = int(n)


def reduce_word(letters, rank: int | None = None) -> tuple:
    """Freely reduce a letter sequence; optionally check indices against ``rank``."""
    out: list[int] = []
    for x in letters:
        x = int(x)
        if x == 0 or (rank is not None and abs(x) > rank):
            raise ValueError(f"letter {x} out of range for rank {rank}")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(w) -> tuple:
    return tuple(-x for x in reversed(w))


def multiply(*words) -> tuple:
    out: list[int] = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def power(w, n: int) -> tuple:
    if n < 0:
        w, n = inverse(w), -n
    return multiply(*([w] * n))


def commutator(u, v) -> tuple:
    return multiply(u, v, inverse(u), inverse(v))


def cyclic_reduce(w) -> tuple:
    w = reduce_word(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def _least_rotation(s) -> int:
    # Booth's algorithm
    n = len(s)
    if n == 0:
        return 0
    ss = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = ss[j]
        i = f[j - k - 1]
        while i != -1 and c != ss[k + i + 1]:
            if c < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if c != ss[k + i + 1]:
            if c < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def least_rotation(w) -> tuple:
    w = tuple(w)
    k = _least_rotation(w)
    return w[k:] + w[:k]


def conjugacy_key(w) -> tuple:
    """Canonical representative of the conjugacy class of ``w``."""
    return least_rotation(cyclic_reduce(w))


def curve_key(w) -> tuple:
    """Canonical form of the free homotopy class of an unoriented loop."""
    c = cyclic_reduce(w)
    return min(least_rotation(c), least_rotation(inverse(c)))


def abelian_vector(w, rank: int) -> tuple:
    v = [0] * rank
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)


@dataclass(frozen=True)
class Automorphism:
    """Endomorphism of F_rank, stored by the images of x_1..x_rank.

    ``compose(f, g)`` means "f first, then g", matching left-to-right words.
    """

    rank: int
    images: tuple
    _neg: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        imgs = tuple(tuple(im) for im in self.images)
        if len(imgs) != self.rank:
            raise ValueError("need one image per generator")
        object.__setattr__(self, "images", imgs)
        object.__setattr__(self, "_neg", tuple(inverse(im) for im in imgs))

    @classmethod
    def identity(cls, rank: int) -> "Automorphism":
        return cls(rank, tuple((k,) for k in range(1, rank + 1)))

    @classmethod
    def conjugation(cls, rank: int, w) -> "Automorphism":
        """x -> w x w^-1."""
        w = reduce_word(w, rank)
        wi = inverse(w)
        return cls(rank, tuple(multiply(w, (k,), wi) for k in range(1, rank + 1)))

    def apply(self, word) -> tuple:
        pos, neg = self.images, self._neg
        out: list[int] = []
        for x in word:
            for y in (pos[x - 1] if x > 0 else neg[-x - 1]):
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
        if len(out) > _cap:
            raise WordLengthError(
                f"image of length {len(out)} exceeds cap {_cap} (set LEFSCHETZ_WORD_CAP)")
        return tuple(out)

    def then(self, other: "Automorphism") -> "Automorphism":
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(im == (k,) for k, im in enumerate(self.images, 1))


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    """Apply ``f`` first, then ``g``."""
    if f.rank != g.rank:
        raise ValueError(f"rank mismatch: {f.rank} vs {g.rank}")
    return Automorphism(f.rank, tuple(g.apply(im) for im in f.images))


def compose_all(autos, rank: int) -> Automorphism:
    images = [(k,) for k in range(1, rank + 1)]
    for a in autos:
        images = [a.apply(im) for im in images]
    return Automorphism(rank, tuple(images))
