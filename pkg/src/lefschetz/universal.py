"""The named factorizations: R_n, the hyperelliptic one, 𝒜, ℬ, 𝒞, 𝒟, ℱ₀ and 𝒜_i."""
from __future__ import annotations

from functools import lru_cache

from .braid import rn_braid_parts
from .factorization import Factorization, MoveCertificate, forward_rotation, rotation_moves
from .mcg import chain

KINDS = ("A", "B", "C", "D", "F0", "H", "Rn")


def _fact(g, indices) -> Factorization:
    return Factorization.from_word(g, chain(*indices))


def build_Rn(g: int, n: int) -> Factorization:
    _, a2, b1, b2 = rn_braid_parts(g, n)
    return _fact(g, a2 + b1 + b2)


def build_rn_lemma(g: int, n: int) -> Factorization:
    """(a_1···a_{n-1})^{2n}·(R_n)², a factorization of T_δ."""
    R = build_Rn(g, n)
    return _fact(g, tuple(range(1, n)) * (2 * n)) + R + R


def _r_squared(g: int, n: int) -> Factorization:
    if n >= 2 * g:
        # only reached for R_7 at g = 3, where it is taken to be empty
        return Factorization(g)
    R = build_Rn(g, n)
    return R + R


@lru_cache(maxsize=None)
def build_universal(kind: str, g: int, n: int | None = None) -> Factorization:
    if g < 3:
        raise ValueError("universal factorizations need genus at least 3")
    if kind == "A":
        return _fact(g, (0, 2, 3, 4) * 10) + _r_squared(g, 5)
    if kind == "B":
        return _fact(g, (0, 1, 2, 3, 4) * 6) + _r_squared(g, 5)
    if kind == "C":
        return _fact(g, tuple(range(0, 7)) * 9) + _r_squared(g, 7)
    if kind == "D":
        return _fact(g, (0, 2, 3, 4, 5, 6) * 12) + _r_squared(g, 7)
    if kind == "F0":
        return sum((build_universal(k, g) for k in "BCD"), build_universal("A", g))
    if kind in ("H", "Hyperelliptic"):
        return _fact(g, tuple(range(1, 2 * g + 1)) * (4 * g + 2))
    if kind == "Rn":
        if n is None:
            raise ValueError("kind Rn needs n")
        return build_rn_lemma(g, n)
    raise ValueError(f"unknown kind {kind!r}")


@lru_cache(maxsize=None)
def build_Ai(i: int, g: int) -> tuple[Factorization, MoveCertificate, MoveCertificate]:
    """(𝒜_i, cert 𝒜 -> a_i·𝒜_i, cert a_i·𝒜_i -> 𝒜_i·a_i)."""
    if not 0 <= i <= 2 * g:
        raise ValueError(f"a{i} out of range for genus {g}")
    A = build_universal("A", g)
    name = f"a{i}"
    p = next((k for k, f in enumerate(A) if f.base == name), None)
    if p is None:
        raise ValueError(f"{name} does not occur in 𝒜")
    r = len(A)
    Ai = A[p + 1:] + A[:p]
    to_front = MoveCertificate(rotation_moves(1, r, p))
    to_back = MoveCertificate(forward_rotation(1, r))
    return Ai, to_front, to_back


def fiber_sum(F1: Factorization, F2: Factorization) -> Factorization:
    return F1 + F2
