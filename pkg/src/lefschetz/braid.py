"""Braid words, the Artin action on F_n, and the full-twist computations behind R_n."""
from __future__ import annotations

from dataclasses import dataclass

from .freegroup import Automorphism, compose_all, multiply


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()  # signed generator indices, +i for σ_i

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("need at least two strands")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if not 1 <= abs(x) < self.strands:
                raise ValueError(f"σ_{abs(x)} out of range in B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)


def _sigma(n: int, i: int, sign: int) -> Automorphism:
    images = [(k,) for k in range(1, n + 1)]
    if sign == 1:
        images[i - 1] = multiply((i,), (i + 1,), (-i,))
        images[i] = (i,)
    else:
        images[i - 1] = (i + 1,)
        images[i] = multiply((-(i + 1),), (i,), (i + 1,))
    return Automorphism(n, tuple(images))


def artin_auto(b: BraidWord) -> Automorphism:
    n = b.strands
    gens = {}
    for x in set(b.letters):
        gens[x] = _sigma(n, abs(x), 1 if x > 0 else -1)
    return compose_all((gens[x] for x in b.letters), n)


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    if b1.strands != b2.strands:
        raise ValueError("strand mismatch")
    return artin_auto(b1) == artin_auto(b2)


def full_twist(n: int) -> BraidWord:
    """Δ² = (σ_1···σ_{n-1})^n."""
    return BraidWord(n, tuple(range(1, n)) * n)


def rn_braid_parts(g: int, n: int) -> tuple[tuple, tuple, tuple, tuple]:
    """Index sequences of a', a'', b', b'' (letters of σ's or, lifted, of a's)."""
    if g < 3 or not 1 < n < 2 * g:
        raise ValueError(f"need g >= 3 and 1 < n < 2g, got g={g}, n={n}")
    a1 = tuple(range(1, n)) * n
    a2 = tuple(range(n + 1, 2 * g + 1)) * (2 * g - n + 1)
    b1 = tuple(x for i in range(n, 0, -1) for x in range(i, i + 2 * g - n + 1))
    b2 = tuple(x for i in range(2 * g - n + 1, 0, -1) for x in range(i, i + n))
    return a1, a2, b1, b2


def build_rn_braid_parts(g: int, n: int) -> tuple[BraidWord, BraidWord, BraidWord, BraidWord]:
    return tuple(BraidWord(2 * g + 1, p) for p in rn_braid_parts(g, n))


def lift_to_mcg(b: BraidWord) -> tuple:
    """x_i -> a_i, letter by letter."""
    return tuple((f"a{abs(x)}", 1 if x > 0 else -1) for x in b.letters)
