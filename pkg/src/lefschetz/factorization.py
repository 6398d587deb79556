"""Positive factorizations in Map_{g,1}, Hurwitz moves and move certificates.

Positions in moves are 1-based: ``HurwitzR(i)`` acts on factors i and i+1.

    R(i):  τ_i·τ_{i+1} -> τ_{i+1}·(τ_i)_{τ_{i+1}}
    L(i):  τ_i·τ_{i+1} -> (τ_{i+1})_{τ_i^{-1}}·τ_i

``(τ)_φ`` is φ⁻¹τφ as a word, i.e. the twist along φ(c).
"""
from __future__ import annotations

from dataclasses import dataclass

from .freegroup import Automorphism, compose, compose_all
from .mcg import (Twist, check_generator, chain, detect_boundary_power, format_word,
                  separating_type, twist_table, word_inverse, word_reduce)


class IllegalMove(ValueError):
    """A certificate step whose precondition fails; ``step`` is 1-based."""

    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step
        self.reason = reason


@dataclass(frozen=True)
class Factor:
    base: str
    conj: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "conj", tuple(self.conj))

    @property
    def sep(self) -> int:
        return separating_type(self.base)

    def word(self) -> tuple:
        """φ⁻¹·b·φ."""
        return word_inverse(self.conj) + ((self.base, 1),) + self.conj

    def conjugate(self, phi) -> "Factor":
        return Factor(self.base, word_reduce(self.conj + tuple(phi)))

    def twist(self, genus: int) -> Twist:
        return Twist.of_factor(self.base, self.conj, twist_table(genus))

    def __str__(self):
        return self.base if not self.conj else f"{self.base} @ {format_word(self.conj)}"


@dataclass(frozen=True)
class Factorization:
    genus: int
    factors: tuple = ()

    def __post_init__(self):
        fs = tuple(f if isinstance(f, Factor) else Factor(f) for f in self.factors)
        for f in fs:
            check_generator(f.base, self.genus)
            for gen, _ in f.conj:
                check_generator(gen, self.genus)
        object.__setattr__(self, "factors", fs)

    @classmethod
    def from_word(cls, genus: int, word) -> "Factorization":
        """Unconjugated factors from a positive word."""
        if any(s != 1 for _, s in word):
            raise ValueError("factorizations have positive factors only")
        return cls(genus, tuple(Factor(gen) for gen, _ in word))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Factorization(self.genus, self.factors[i])
        return self.factors[i]

    def __add__(self, other: "Factorization") -> "Factorization":
        if other.genus != self.genus:
            raise ValueError("genus mismatch")
        return Factorization(self.genus, self.factors + other.factors)

    def __mul__(self, n: int) -> "Factorization":
        return Factorization(self.genus, self.factors * n)

    def twists(self) -> list[Twist]:
        return [f.twist(self.genus) for f in self.factors]

    def word(self) -> tuple:
        return tuple(x for f in self.factors for x in f.word())


def product(F: Factorization) -> Automorphism:
    return twists_product(F.twists(), F.genus)


def twists_product(twists, genus: int) -> Automorphism:
    return compose_all((t.autos()[0] for t in twists), 2 * genus)


def boundary_power(F: Factorization) -> int | None:
    return detect_boundary_power(product(F), twist_table(F.genus))


def _check_index(F, i):
    if not 1 <= i < len(F):
        raise IndexError(f"move index {i} out of range for {len(F)} factors")


def hurwitz_right(F: Factorization, i: int) -> Factorization:
    _check_index(F, i)
    fs = list(F.factors)
    x, y = fs[i - 1], fs[i]
    fs[i - 1], fs[i] = y, x.conjugate(y.word())
    return Factorization(F.genus, tuple(fs))


def hurwitz_left(F: Factorization, i: int) -> Factorization:
    _check_index(F, i)
    fs = list(F.factors)
    x, y = fs[i - 1], fs[i]
    fs[i - 1], fs[i] = y.conjugate(word_inverse(x.word())), x
    return Factorization(F.genus, tuple(fs))


def global_conjugate(F: Factorization, phi) -> Factorization:
    return Factorization(F.genus, tuple(f.conjugate(phi) for f in F.factors))


def factor_equal(f1: Factor, f2: Factor, genus: int) -> bool:
    return f1.twist(genus) == f2.twist(genus)


def factorizations_equal(F: Factorization, G: Factorization) -> bool:
    return F.genus == G.genus and len(F) == len(G) and F.twists() == G.twists()


# ---------------------------------------------------------------------------
# moves and certificates

@dataclass(frozen=True)
class HurwitzR:
    i: int


@dataclass(frozen=True)
class HurwitzL:
    i: int


@dataclass(frozen=True)
class GlobalConj:
    word: tuple


@dataclass(frozen=True)
class Subst:
    kind: str       # "chain" or "lantern"
    direction: str  # "fwd" or "bwd"
    start: int


def relation_blocks(kind: str) -> tuple[tuple, tuple]:
    """(forward lhs, forward rhs) of the chain and lantern relations."""
    if kind == "chain":
        return chain(0, 2, 3, 4, times=10), chain(0, 1, 2, 3, 4, times=6)
    if kind == "lantern":
        return chain(0, 1, 2, 3, 4, 5, 6, times=9), chain(0, 2, 3, 4, 5, 6, times=12)
    raise ValueError(f"unknown relation {kind!r}")


def subst_blocks(kind: str, direction: str) -> tuple[tuple, tuple]:
    lhs, rhs = relation_blocks(kind)
    if direction == "fwd":
        return lhs, rhs
    if direction == "bwd":
        return rhs, lhs
    raise ValueError(f"unknown direction {direction!r}")


def invert_move(m):
    if isinstance(m, HurwitzR):
        return HurwitzL(m.i)
    if isinstance(m, HurwitzL):
        return HurwitzR(m.i)
    if isinstance(m, GlobalConj):
        return GlobalConj(word_inverse(m.word))
    return Subst(m.kind, "bwd" if m.direction == "fwd" else "fwd", m.start)


def shift_move(m, k: int):
    if isinstance(m, HurwitzR):
        return HurwitzR(m.i + k)
    if isinstance(m, HurwitzL):
        return HurwitzL(m.i + k)
    if isinstance(m, Subst):
        return Subst(m.kind, m.direction, m.start + k)
    raise ValueError("global conjugation cannot be shifted into a block")


@dataclass(frozen=True)
class MoveCertificate:
    moves: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __add__(self, other: "MoveCertificate") -> "MoveCertificate":
        return MoveCertificate(self.moves + other.moves)

    def inverse(self) -> "MoveCertificate":
        return MoveCertificate(tuple(invert_move(m) for m in reversed(self.moves)))

    def shifted(self, k: int) -> "MoveCertificate":
        return MoveCertificate(tuple(shift_move(m, k) for m in self.moves))


def _relation_ok(kind: str, genus: int) -> bool:
    key = (kind, genus)
    if key not in _RELATION_CHECKED:
        from .mcg import mcg_equal
        lhs, rhs = relation_blocks(kind)
        _RELATION_CHECKED[key] = mcg_equal(lhs, rhs, twist_table(genus))
    return _RELATION_CHECKED[key]


_RELATION_CHECKED: dict = {}


def apply_moves(state: list, moves, genus: int, offset: int = 0) -> list:
    """Replay moves on a list of Twists in place; raises IllegalMove."""
    table = twist_table(genus)
    gen_twist = {}
    for step, m in enumerate(moves, offset + 1):
        if isinstance(m, (HurwitzR, HurwitzL)):
            i = m.i
            if not 1 <= i < len(state):
                raise IllegalMove(step, f"index {i} out of range for {len(state)} factors")
            x, y = state[i - 1], state[i]
            if isinstance(m, HurwitzR):
                state[i - 1], state[i] = y, x.conjugated(y, 1)
            else:
                state[i - 1], state[i] = y.conjugated(x, -1), x
        elif isinstance(m, GlobalConj):
            state[:] = [t.conjugated_by_word(m.word, table) for t in state]
        elif isinstance(m, Subst):
            if genus < 3:
                raise IllegalMove(step, "relations need genus at least 3")
            lhs, rhs = subst_blocks(m.kind, m.direction)
            s = m.start - 1
            if s < 0 or s + len(lhs) > len(state):
                raise IllegalMove(step, f"{m.kind} block at {m.start} runs off the end")
            for k, (gen, _) in enumerate(lhs):
                t = gen_twist.get(gen) or gen_twist.setdefault(gen, Twist.generator(gen, table))
                if state[s + k] != t:
                    raise IllegalMove(step, f"factor {s + k + 1} is not {gen}")
            if not _relation_ok(m.kind, genus):
                raise IllegalMove(step, f"{m.kind} blocks have different products")
            state[s:s + len(lhs)] = [Twist.generator(gen, table) for gen, _ in rhs]
        else:
            raise IllegalMove(step, f"unknown move {m!r}")
    return state


def replay(start: Factorization, cert: MoveCertificate) -> list[Twist]:
    return apply_moves(start.twists(), cert.moves, start.genus)


def check_certificate(start: Factorization, cert: MoveCertificate, end: Factorization) -> bool:
    """True iff the replay ends factor-wise equal to ``end``; IllegalMove on a bad step."""
    if start.genus != end.genus:
        return False
    return replay(start, cert) == end.twists()


# ---------------------------------------------------------------------------
# macros from the central-element lemma

def _central_for(twists, targets, genus) -> bool:
    """Does the product of ``twists`` commute with every twist in ``targets``?"""
    P = twists_product(twists, genus)
    if detect_boundary_power(P, twist_table(genus)) is not None:
        return True
    for t in targets:
        T = t.autos()[0]
        if compose(P, T) != compose(T, P):
            return False
    return True


def forward_rotation(start: int, length: int) -> list:
    """Moves the first factor of the block [start, start+length) to its end."""
    return [HurwitzR(start + k) for k in range(length - 1)]


def backward_rotation(start: int, length: int) -> list:
    """Moves the last factor of the block to its front."""
    return [HurwitzL(start + k) for k in range(length - 2, -1, -1)]


def rotation_moves(start: int, length: int, k: int) -> list:
    """Cyclically rotate a central block left by k places, by the cheaper direction."""
    k %= max(length, 1)
    if k == 0:
        return []
    if k <= length - k:
        return forward_rotation(start, length) * k
    return backward_rotation(start, length) * (length - k)


def pass_left(start: int, length: int, span: int) -> list:
    """Move a central block [start, start+length) left over ``span`` factors."""
    moves = []
    for t in range(length):
        p = start + t
        moves += [HurwitzR(q) for q in range(p - 1, p - span - 1, -1)]
    return moves


def pass_right(start: int, length: int, span: int) -> list:
    """Move a central block right over the ``span`` factors that follow it."""
    moves = []
    for t in range(length - 1, -1, -1):
        p = start + t
        moves += [HurwitzL(q) for q in range(p, p + span)]
    return moves


def rotate_certificate(F: Factorization) -> tuple[Factorization, MoveCertificate]:
    tw = F.twists()
    if not _central_for(tw, tw, F.genus):
        raise ValueError("product is not central for the factors")
    if len(F) <= 1:
        return F, MoveCertificate()
    return F[1:] + F[:1], MoveCertificate(forward_rotation(1, len(F)))


def _single_conjugation(r: int, j: int, sign: int) -> list:
    """Moves F -> (F)_{τ_j^sign} for a central r-factor block."""
    moves = []
    if sign == 1:
        moves += rotation_moves(1, r, j)            # S·P·τ
        moves += [HurwitzR(q) for q in range(r - 1, 0, -1)]   # τ·(S·P)_τ
        moves += rotation_moves(1, r, r - (j - 1))  # (P·τ·S)_τ
    else:
        moves += rotation_moves(1, r, j - 1)        # τ·S·P
        moves += [HurwitzL(q) for q in range(1, r)]           # (S·P)_{τ⁻¹}·τ
        moves += rotation_moves(1, r, r - j)        # (P·τ·S)_{τ⁻¹}
    return moves


def conjugation_certificate(F: Factorization, phi) -> tuple[Factorization, MoveCertificate]:
    """Certificate F ~ (F)_φ with φ = τ_{j1}^{e1}·τ_{j2}^{e2}··· given as (index, sign) pairs."""
    letters = list(phi)
    tw = F.twists()
    word = ()
    for item in letters:
        try:
            j, e = item
        except (TypeError, ValueError):
            raise ValueError("φ must be a word in the factors: (index, ±1) pairs") from None
        if not 1 <= j <= len(F) or e not in (1, -1):
            raise ValueError(f"bad factor letter {item!r}")
        w = F[j - 1].word()
        word += w if e == 1 else word_inverse(w)
    if not letters:
        return F, MoveCertificate()
    if not _central_for(tw, tw, F.genus):
        raise ValueError("product is not central for the factors")
    moves = []
    for j, e in reversed(letters):
        moves += _single_conjugation(len(F), j, e)
    return global_conjugate(F, word_reduce(word)), MoveCertificate(moves)


def block_commute_certificate(Fp: Factorization, F: Factorization) -> MoveCertificate:
    """Certificate Fp·F ~ F·Fp; requires product(F) to commute with Fp's factors."""
    if not len(F) or not len(Fp):
        return MoveCertificate()
    if not _central_for(F.twists(), Fp.twists(), F.genus):
        raise ValueError("product(F) is not central")
    return MoveCertificate(pass_left(len(Fp) + 1, len(F), len(Fp)))
