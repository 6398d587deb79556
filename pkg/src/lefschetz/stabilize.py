"""Signed factorizations, derivations, and their compilation into stabilized
Hurwitz-equivalence certificates.

A derivation is a list of ≡-moves on signed factorizations:
Hurwitz moves on positive neighbours, creation or cancellation of a pair
a_i^{±1}·a_i^{∓1}, and the defining relations (commute, braid, chain,
lantern) on blocks of positive generator factors. ``compile_positive``
turns it into positive Hurwitz moves on F·𝒜ⁿ by standing a copy of 𝒜_i in
for every negative factor a_i⁻¹.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .factorization import (Factor, Factorization, GlobalConj, HurwitzL, HurwitzR, IllegalMove,
                            MoveCertificate, Subst, check_certificate, invert_move, pass_left,
                            pass_right, relation_blocks, rotation_moves, subst_blocks)
from .freegroup import compose
from .invariants import census, euler_characteristic, section_square, signature
from .mcg import (Twist, check_generator, expand_separating, mcg_equal, separating_type,
                  twist_table)
from .universal import build_Ai, build_universal


@dataclass(frozen=True)
class PairCreate:
    i: int
    gen: str
    sign: int = 1  # sign of the first factor of the inserted pair


@dataclass(frozen=True)
class PairCancel:
    i: int


@dataclass(frozen=True)
class Relation:
    kind: str               # commute | braid | chain | lantern
    direction: str = "fwd"
    pos: int = 1


@dataclass(frozen=True)
class DerivationCertificate:
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __add__(self, other: "DerivationCertificate") -> "DerivationCertificate":
        return DerivationCertificate(self.steps + other.steps)


@dataclass(frozen=True)
class SignedFactorization:
    """Factors are ``(Factor or Twist, ±1)`` pairs."""

    genus: int
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((f, int(s)) for f, s in self.factors))

    @classmethod
    def positive(cls, F: Factorization) -> "SignedFactorization":
        return cls(F.genus, tuple((f, 1) for f in F))

    def __len__(self):
        return len(self.factors)

    def signed_twists(self) -> list:
        return [(f if isinstance(f, Twist) else f.twist(self.genus), s) for f, s in self.factors]

    def signs(self) -> tuple:
        return tuple(s for _, s in self.factors)

    def negatives(self) -> int:
        return sum(1 for _, s in self.factors if s < 0)


@dataclass(frozen=True)
class StabilizationLedger:
    n: int = 0
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0
    k: int = 0
    l: int = 0
    N: int = 0


class HypothesisError(ValueError):
    pass


class LedgerContradiction(ValueError):
    pass


# ---------------------------------------------------------------------------
# simplify and replay

def simplify(F: Factorization) -> tuple[SignedFactorization, DerivationCertificate]:
    out, steps = [], []
    for f in F:
        if f.sep:
            raise ValueError(f"separating factor {f} cannot be simplified")
        p = len(out) + 1
        conj = list(expand_separating(f.conj, F.genus))
        left, right = [], []
        while conj:
            gen, e = conj.pop()
            if e == 1:
                steps += [PairCreate(p, gen, -1), HurwitzL(p + 1)]
                left.append((Factor(gen), -1))
                right.insert(0, (Factor(gen), 1))
            else:
                steps += [PairCreate(p + 1, gen, 1), HurwitzR(p)]
                left.append((Factor(gen), 1))
                right.insert(0, (Factor(gen), -1))
            p += 1
        out += left + [(Factor(f.base), 1)] + right
    return SignedFactorization(F.genus, tuple(out)), DerivationCertificate(steps)


@lru_cache(maxsize=None)
def _generator_relation(g: int, x: str, y: str) -> str | None:
    """'commute', 'braid' or None for two generators."""
    t = twist_table(g)
    X, Y = t.twist_autos[x], t.twist_autos[y]
    if compose(X, Y) == compose(Y, X):
        return "commute"
    if mcg_equal(((x, 1), (y, 1), (x, 1)), ((y, 1), (x, 1), (y, 1)), t):
        return "braid"
    return None


def _generator_names(table) -> dict:
    return {Twist.generator(n, table): n for n in table.twist_autos if n.startswith("a")}


def apply_steps(state: list, steps, genus: int) -> list:
    """Replay ≡-moves on a list of (Twist, sign); raises IllegalMove."""
    table = twist_table(genus)
    names = _generator_names(table)
    for step, m in enumerate(steps, 1):
        n = len(state)
        if isinstance(m, (HurwitzR, HurwitzL)):
            i = m.i
            if not 1 <= i < n:
                raise IllegalMove(step, f"index {i} out of range")
            (x, sx), (y, sy) = state[i - 1], state[i]
            if sx < 0 or sy < 0:
                raise IllegalMove(step, "Hurwitz moves need two positive factors")
            if isinstance(m, HurwitzR):
                state[i - 1:i + 1] = [(y, 1), (x.conjugated(y, 1), 1)]
            else:
                state[i - 1:i + 1] = [(y.conjugated(x, -1), 1), (x, 1)]
        elif isinstance(m, PairCreate):
            if not 1 <= m.i <= n + 1 or m.sign not in (1, -1):
                raise IllegalMove(step, f"cannot insert a pair at {m.i}")
            t = Twist.generator(check_generator(m.gen, genus), table)
            state[m.i - 1:m.i - 1] = [(t, m.sign), (t, -m.sign)]
        elif isinstance(m, PairCancel):
            if not 1 <= m.i < n:
                raise IllegalMove(step, f"index {m.i} out of range")
            (x, sx), (y, sy) = state[m.i - 1], state[m.i]
            if sx != -sy or x != y:
                raise IllegalMove(step, "factors are not an inverse pair")
            del state[m.i - 1:m.i + 1]
        elif isinstance(m, Relation):
            p = m.pos - 1
            if m.kind in ("commute", "braid"):
                width = 2 if m.kind == "commute" else 3
                if p < 0 or p + width > n:
                    raise IllegalMove(step, "relation runs off the end")
                block = state[p:p + width]
                if any(s < 0 for _, s in block) or any(t not in names for t, _ in block):
                    raise IllegalMove(step, f"{m.kind} needs positive generator factors")
                gens = [names[t] for t, _ in block]
                if m.kind == "braid" and gens[0] != gens[2]:
                    raise IllegalMove(step, "braid relation needs the pattern x y x")
                if _generator_relation(genus, gens[0], gens[1]) != m.kind:
                    raise IllegalMove(step, f"{gens[0]} and {gens[1]} do not satisfy {m.kind}")
                if m.kind == "commute":
                    state[p:p + 2] = [block[1], block[0]]
                else:
                    state[p:p + 3] = [block[1], block[0], block[1]]
            elif m.kind in ("chain", "lantern"):
                lhs, rhs = subst_blocks(m.kind, m.direction)
                if p < 0 or p + len(lhs) > n:
                    raise IllegalMove(step, "relation runs off the end")
                for k, (gen, _) in enumerate(lhs):
                    t, s = state[p + k]
                    if s < 0 or names.get(t) != gen:
                        raise IllegalMove(step, f"factor {p + k + 1} is not {gen}")
                state[p:p + len(lhs)] = [(Twist.generator(gen, table), 1) for gen, _ in rhs]
            else:
                raise IllegalMove(step, f"unknown relation {m.kind!r}")
        else:
            raise IllegalMove(step, f"unknown step {m!r}")
    return state


def replay_derivation(start: SignedFactorization, d: DerivationCertificate) -> SignedFactorization:
    state = apply_steps(start.signed_twists(), d.steps, start.genus)
    return SignedFactorization(start.genus, tuple(state))


def signed_equal(F: SignedFactorization, G: SignedFactorization) -> bool:
    return F.genus == G.genus and F.signed_twists() == G.signed_twists()


def _symbolic(signs, steps):
    """Track only signs and negative generators; yields the state before each step."""
    state = list(signs)
    for m in steps:
        yield state, m
        if isinstance(m, PairCreate):
            pair = [1, ("neg", m.gen)] if m.sign == 1 else [("neg", m.gen), 1]
            state[m.i - 1:m.i - 1] = pair
        elif isinstance(m, PairCancel):
            del state[m.i - 1:m.i + 1]
        elif isinstance(m, Relation) and m.kind in ("chain", "lantern"):
            lhs, rhs = subst_blocks(m.kind, m.direction)
            state[m.pos - 1:m.pos - 1 + len(lhs)] = [1] * len(rhs)
    yield state, None


def _initial_symbols(F: SignedFactorization) -> list:
    out = []
    for f, s in F.factors:
        if s > 0:
            out.append(1)
        else:
            base = f.base if isinstance(f, Factor) else _generator_names(twist_table(F.genus)).get(f)
            if base is None or (isinstance(f, Factor) and f.conj):
                raise ValueError("negative factors must be plain generators")
            out.append(("neg", base))
    return out


def invert_derivation(start: SignedFactorization, d: DerivationCertificate) -> DerivationCertificate:
    inv = []
    for state, m in _symbolic(_initial_symbols(start), d.steps):
        if m is None:
            break
        if isinstance(m, (HurwitzR, HurwitzL)):
            inv.append(invert_move(m))
        elif isinstance(m, PairCreate):
            inv.append(PairCancel(m.i))
        elif isinstance(m, PairCancel):
            a, b = state[m.i - 1], state[m.i]
            if a == 1:
                inv.append(PairCreate(m.i, b[1], 1))
            else:
                inv.append(PairCreate(m.i, a[1], -1))
        else:
            if m.kind in ("chain", "lantern"):
                inv.append(Relation(m.kind, "bwd" if m.direction == "fwd" else "fwd", m.pos))
            else:
                inv.append(m)
    return DerivationCertificate(tuple(reversed(inv)))


def _cancels(s, t) -> bool:
    if isinstance(s, HurwitzR):
        return t == HurwitzL(s.i)
    if isinstance(s, HurwitzL):
        return t == HurwitzR(s.i)
    if isinstance(s, PairCreate):
        return t == PairCancel(s.i)
    if isinstance(s, Relation):
        if s.kind in ("commute", "braid"):
            return t == s
        return isinstance(t, Relation) and t.kind == s.kind and t.pos == s.pos and t.direction != s.direction
    return False


def peephole(steps) -> list:
    """Drop adjacent step pairs that undo each other."""
    out: list = []
    for s in steps:
        if out and _cancels(out[-1], s):
            out.pop()
        else:
            out.append(s)
    return out


def derivation_from_moves(cert: MoveCertificate) -> DerivationCertificate:
    steps = []
    for m in cert:
        if isinstance(m, (HurwitzR, HurwitzL)):
            steps.append(m)
        elif isinstance(m, Subst):
            steps.append(Relation(m.kind, m.direction, m.start))
        else:
            raise ValueError("global conjugation has no derivation counterpart")
    return DerivationCertificate(steps)


def derivation_for(F: Factorization, Fp: Factorization, cert: MoveCertificate) -> DerivationCertificate:
    """The derivation simplify(F) -> simplify(F′) induced by a positive certificate F -> F′."""
    sF, cF = simplify(F)
    _, cFp = simplify(Fp)
    return invert_derivation(sF, cF) + derivation_from_moves(cert) + cFp


# ---------------------------------------------------------------------------
# the compiler

_TRADES = {
    # (kind, direction): (block consumed from the tail, block produced)
    ("chain", "fwd"): ("B", "A"),
    ("chain", "bwd"): ("A", "B"),
    ("lantern", "fwd"): ("D", "C"),
    ("lantern", "bwd"): ("C", "D"),
}


class _Compiler:
    """Emits positive moves on (expanded main part)·(tail of universal blocks)."""

    def __init__(self, genus, symbols, tail, trade: bool, prefix: int = 0):
        self.g = genus
        self.main = list(symbols)
        self.tail = list(tail)
        self.trade = trade
        self.prefix = prefix
        self.moves: list = []
        self.sizes = {k: len(build_universal(k, genus)) for k in "ABCD"}
        self.trades = []
        self.max_neg = sum(1 for s in self.main if s != 1)

    def _len(self, sym) -> int:
        return 1 if sym == 1 else self.sizes["A"] - 1

    def offset(self, idx) -> int:
        return self.prefix + sum(self._len(s) for s in self.main[:idx])

    @property
    def main_len(self) -> int:
        return self.offset(len(self.main))

    def tail_offset(self, k) -> int:
        return self.main_len + sum(self.sizes[b] for b in self.tail[:k])

    def emit(self, moves):
        self.moves.extend(moves)

    def take(self, label, to_pos) -> None:
        """Bring the first tail block with ``label`` to 0-based position ``to_pos``."""
        try:
            k = self.tail.index(label)
        except ValueError:
            raise LedgerContradiction(f"no copy of {label} left in the padding") from None
        s = self.tail_offset(k)
        self.emit(pass_left(s + 1, self.sizes[label], s - to_pos))
        del self.tail[k]

    def step(self, m):
        if isinstance(m, (HurwitzR, HurwitzL)):
            p = self.offset(m.i - 1) + 1
            self.emit([type(m)(p)])
        elif isinstance(m, PairCreate):
            q = self.offset(m.i - 1)
            self.take("A", q)
            _, front, back = build_Ai(int(m.gen[1:]), self.g)
            cert = front if m.sign == 1 else front + back
            self.emit(cert.shifted(q).moves)
            pair = [1, ("neg", m.gen)] if m.sign == 1 else [("neg", m.gen), 1]
            self.main[m.i - 1:m.i - 1] = pair
        elif isinstance(m, PairCancel):
            a, b = self.main[m.i - 1], self.main[m.i]
            q = self.offset(m.i - 1)
            gen = b[1] if a == 1 else a[1]
            _, front, back = build_Ai(int(gen[1:]), self.g)
            cert = front if a == 1 else front + back
            self.emit(cert.inverse().shifted(q).moves)
            size = self.sizes["A"]
            self.emit(pass_right(q + 1, size, self.main_len - q - size))
            del self.main[m.i - 1:m.i + 1]
            self.tail.insert(0, "A")
        elif isinstance(m, Relation):
            p = self.offset(m.pos - 1)
            if m.kind == "commute":
                self.emit([HurwitzR(p + 1)])
            elif m.kind == "braid":
                self.emit([HurwitzR(p + 1), HurwitzR(p + 2)])
            else:
                if self.trade:
                    self._trade(m.kind, m.direction, p)
                else:
                    self.emit([Subst(m.kind, m.direction, p + 1)])
                lhs, rhs = subst_blocks(m.kind, m.direction)
                self.main[m.pos - 1:m.pos - 1 + len(lhs)] = [1] * len(rhs)
        self.max_neg = max(self.max_neg, sum(1 for s in self.main if s != 1))

    def _trade(self, kind, direction, q):
        """P·L·S·..·K·.. -> P·R·S·..·K'·.. with K = R·ρ and K' = L·ρ."""
        consumed, produced = _TRADES[(kind, direction)]
        lhs, rhs = subst_blocks(kind, direction)
        p1, p2 = len(lhs), len(rhs)
        rho = self.sizes[consumed] - p2
        k = self.tail.index(consumed) if consumed in self.tail else None
        if k is None:
            raise LedgerContradiction(f"no copy of {consumed} left for a {kind} trade")
        s = self.tail_offset(k)
        K = self.sizes[consumed]
        self.emit(pass_left(s + 1, K, s - (q + p1)))        # K next to L
        self.emit(pass_left(q + p1 + 1, K, p1))             # R·ρ·L
        self.emit(rotation_moves(q + p2 + 1, rho + p1, rho))  # R·L·ρ
        span = s - (q + p1)
        self.emit(pass_right(q + p2 + 1, p1 + rho, span))   # back into the tail slot
        self.tail[k] = produced
        self.trades.append((kind, direction))

    def swap_tail(self, k):
        """Swap tail blocks k and k+1."""
        s = self.tail_offset(k)
        L1, L2 = self.sizes[self.tail[k]], self.sizes[self.tail[k + 1]]
        self.emit(pass_left(s + L1 + 1, L2, L1))
        self.tail[k], self.tail[k + 1] = self.tail[k + 1], self.tail[k]

    def arrange_tail(self, target):
        if sorted(target) != sorted(self.tail):
            raise LedgerContradiction("padding blocks do not match the target")
        for i, want in enumerate(target):
            j = self.tail.index(want, i)
            while j > i:
                self.swap_tail(j - 1)
                j -= 1


def _compose_derivation(F, Fp, d):
    sF, cF = simplify(F)
    sFp, cFp = simplify(Fp)
    steps = peephole(cF.steps + d.steps + invert_derivation(sFp, cFp).steps)
    start = SignedFactorization.positive(F)
    end = apply_steps(start.signed_twists(), steps, F.genus)
    if end != SignedFactorization.positive(Fp).signed_twists():
        raise ValueError("derivation endpoints mismatch")
    return steps


def negative_counts(F: Factorization, steps) -> list[int]:
    """n_j for each intermediate state."""
    return [sum(1 for s in state if s != 1)
            for state, _ in _symbolic([1] * len(F), steps)]


def compile_positive(F: Factorization, Fp: Factorization, d: DerivationCertificate,
                     ) -> tuple[int, MoveCertificate]:
    """(n, certificate F·𝒜ⁿ -> F′·𝒜ⁿ); chain and lantern steps stay as Subst moves."""
    steps = _compose_derivation(F, Fp, d)
    n = max(negative_counts(F, steps))
    comp = _Compiler(F.genus, [1] * len(F), ["A"] * n, trade=False)
    for m in steps:
        comp.step(m)
    return n, MoveCertificate(comp.moves)


def trade_ledger(cert, n: int = 0) -> StabilizationLedger:
    """k, l from the Subst moves; a, b, c, d are the copies each label must start with."""
    count = {"A": 0, "B": 0, "C": 0, "D": 0}
    low = dict(count)
    k = l = 0
    moves = cert.moves if isinstance(cert, MoveCertificate) else cert
    for m in moves:
        if isinstance(m, Subst):
            consumed, produced = _TRADES[(m.kind, m.direction)]
            count[consumed] -= 1
            low[consumed] = min(low[consumed], count[consumed])
            count[produced] += 1
            sign = 1 if m.direction == "fwd" else -1
            if m.kind == "chain":
                l += sign
            else:
                k += sign
    return StabilizationLedger(n, -low["A"], -low["B"], -low["C"], -low["D"], k, l)


def _reservoir(F, steps) -> dict:
    """Minimum starting copies of each block needed to run ``steps`` in trade mode."""
    count = {"A": 0, "B": 0, "C": 0, "D": 0}
    low = dict(count)
    for state, m in _symbolic([1] * len(F), steps):
        if m is None:
            break
        if isinstance(m, PairCreate):
            count["A"] -= 1
        elif isinstance(m, PairCancel):
            count["A"] += 1
        elif isinstance(m, Relation) and m.kind in ("chain", "lantern"):
            consumed, produced = _TRADES[(m.kind, m.direction)]
            count[consumed] -= 1
            low[consumed] = min(low[consumed], count[consumed])
            count[produced] += 1
        low["A"] = min(low["A"], count["A"])
    return {k: -v for k, v in low.items()}


# ---------------------------------------------------------------------------
# reducible fibers

def _peel(W: list, t: int, g: int, moves: list) -> list:
    """One step of the reducible-fiber lemma on the separating factor at 0-based t,
    which is immediately followed by a copy of 𝒜."""
    tau = W[t]
    gen, e = tau.conj[-1]
    i = int(gen[1:])
    Ai, front, back = build_Ai(i, g)
    size = len(Ai) + 1
    tau2 = Factor(tau.base, tau.conj[:-1])
    if e == -1:
        # τ'=(τ)_{a_i}: τ·𝒜 ~ τ·a_i·𝒜_i ~ a_i·τ'·𝒜_i ~ τ'·(a_i)_{τ'}·𝒜_i
        moves += front.shifted(t + 1).moves
        moves += [HurwitzR(t + 1), HurwitzR(t + 1)]
        new = [tau2, Factor(gen).conjugate(expand_separating(tau2.word(), g))] + list(Ai)
    else:
        # τ'=(τ)_{a_i^-1}: τ·𝒜 ~ 𝒜·τ ~ 𝒜_i·a_i·τ ~ 𝒜_i·τ'·a_i ~ τ'·(𝒜_i)_{τ'}·a_i
        moves += pass_left(t + 2, size, 1)
        moves += (front + back).shifted(t).moves
        moves += [HurwitzL(t + size)]
        moves += [HurwitzR(q) for q in range(t + size - 1, t, -1)]
        w = expand_separating(tau2.word(), g)
        new = [tau2] + [f.conjugate(w) for f in Ai] + [Factor(gen)]
    return W[:t] + new + W[t + size + 1:]


def _normalize(F: Factorization) -> tuple[int, list, MoveCertificate, int]:
    """Bring F·𝒜^N to s_{h1}···s_{hs}·(non-separating), N = total conjugator length."""
    g = F.genus
    W = list(F.factors)
    moves: list = []
    # separating factors move to the front in their original order, so no
    # separating twist is ever conjugated by another one
    seps = [k for k, f in enumerate(W) if f.sep]
    for t, src in enumerate(seps):
        for q in range(src, t, -1):
            moves.append(HurwitzR(q))
            x, y = W[q - 1], W[q]
            W[q - 1], W[q] = y, x.conjugate(expand_separating(y.word(), g))
    s = len(seps)
    W[:s] = [Factor(f.base, expand_separating(f.conj, g)) for f in W[:s]]
    A = build_universal("A", g)
    N = sum(len(f.conj) for f in W[:s])
    tail_start = len(W)
    W = W + list(A) * N
    avail = tail_start  # 0-based start of the next unused 𝒜 copy
    for t in range(s - 1, -1, -1):
        garbage = 0
        while W[t].conj:
            # bring the next copy of 𝒜 right after τ
            size = len(A)
            moves += pass_left(avail + 1, size, avail - (t + 1))
            W = W[:t + 1] + W[avail:avail + size] + W[t + 1:avail] + W[avail + size:]
            W = _peel(W, t, g, moves)
            avail += size
            garbage += size
        # move the normalized separating factors after τ back in front of the garbage
        for u in range(s - 1 - t):
            src = t + 1 + garbage + u
            for q in range(src, t + 1 + u, -1):
                moves.append(HurwitzR(q))
                x, y = W[q - 1], W[q]
                W[q - 1], W[q] = y, x.conjugate(expand_separating(y.word(), g))
    return N, W, MoveCertificate(moves), s


def reducible_normalize(F: Factorization, Fp: Factorization):
    """(N, F̃, F̃′, cert F·𝒜^N -> S·F̃, cert F′·𝒜^N -> S·F̃′).

    S is the common sorted prefix of plain separating twists. The side with
    fewer conjugator letters absorbs its spare copies of 𝒜 into its tail.
    """
    if census(F).separating != census(Fp).separating:
        raise HypothesisError("separating censuses differ")
    NF, WF, cF, s = _normalize(F)
    NFp, WFp, cFp, _ = _normalize(Fp)
    N = max(NF, NFp)
    A = list(build_universal("A", F.genus))
    WF += A * (N - NF)
    WFp += A * (N - NFp)
    if [f.base for f in WF[:s]] != [f.base for f in WFp[:s]]:
        raise HypothesisError("separating factors occur in a different order of types")
    g = F.genus
    return (N, Factorization(g, tuple(WF[s:])), Factorization(g, tuple(WFp[s:])), cF, cFp,
            Factorization(g, tuple(WF[:s])))


# ---------------------------------------------------------------------------
# the pipeline

@lru_cache(maxsize=None)
def universal_constants(g: int) -> dict:
    """Block size and signature differences used in the final bookkeeping."""
    size = {k: len(build_universal(k, g)) for k in "ABCD"}
    sig = {k: signature(build_universal(k, g)).signature for k in "ABCD"}
    return {"chi_AB": size["A"] - size["B"], "chi_DC": size["D"] - size["C"],
            "sig_AB": sig["A"] - sig["B"], "sig_CD": sig["C"] - sig["D"]}


def canonical_tail(counts: dict) -> list:
    """Cycles of A, B, C, D while copies remain (ℱ₀^p when all counts equal p)."""
    left = dict(counts)
    out = []
    while any(left.values()):
        for k in "ABCD":
            if left.get(k, 0) > 0:
                out.append(k)
                left[k] -= 1
    return out


def padding(genus: int, labels) -> Factorization:
    F = Factorization(genus)
    for k in labels:
        F = F + build_universal(k, genus)
    return F


@dataclass(frozen=True)
class StabilizationResult:
    ledger: StabilizationLedger
    certificate: MoveCertificate
    start: Factorization
    end: Factorization
    trades: tuple = field(default=())

    def __iter__(self):
        return iter((self.ledger, self.certificate))


def check_hypotheses(F: Factorization, Fp: Factorization) -> None:
    if F.genus != Fp.genus:
        raise HypothesisError("genus differs")
    if euler_characteristic(F) != euler_characteristic(Fp):
        raise HypothesisError("(i) Euler characteristics differ")
    if section_square(F) != section_square(Fp):
        raise HypothesisError("section squares differ")
    if census(F) != census(Fp):
        raise HypothesisError("(iii) reducible fiber censuses differ")
    if signature(F).signature != signature(Fp).signature:
        raise HypothesisError("(ii) signatures differ")


def stable_equivalence(F: Factorization, Fp: Factorization, d: DerivationCertificate,
                       enforce_hypotheses: bool = True, verify: bool = True) -> StabilizationResult:
    """Certificate F·ℱ₀^p ~ F′·(padding) built from a derivation of the non-separating parts.

    ``d`` must run from simplify(F̃) to simplify(F̃′) where F̃, F̃′ are the
    non-separating parts produced by ``reducible_normalize`` (F and F′
    themselves when there are no separating factors).
    """
    g = F.genus
    if enforce_hypotheses:
        check_hypotheses(F, Fp)
    N, Ft, Ftp, cN, cNp, S = reducible_normalize(F, Fp)
    s = len(S)
    steps = _compose_derivation(Ft, Ftp, d)
    n = max(negative_counts(Ft, steps))
    need = _reservoir(Ft, steps)
    p = max(N + need["A"], need["B"], need["C"], need["D"])

    comp = _Compiler(g, [1] * (len(F)), canonical_tail({k: p for k in "ABCD"}), trade=True)
    comp.arrange_tail(["A"] * p + ["B"] * p + ["C"] * p + ["D"] * p)
    comp.emit(cN.moves)
    # the normalized main part is S·F̃ and N copies of 𝒜 were used up
    comp.main = [1] * len(Ft)
    comp.prefix = s
    comp.tail = comp.tail[N:]
    for m in steps:
        comp.step(m)
    k = sum((1 if dr == "fwd" else -1) for kd, dr in comp.trades if kd == "lantern")
    l = sum((1 if dr == "fwd" else -1) for kd, dr in comp.trades if kd == "chain")
    final = {"A": p + l, "B": p - l, "C": p + k, "D": p - k}
    rest = {"A": p + l - N, "B": p - l, "C": p + k, "D": p - k}
    comp.arrange_tail(["A"] * rest["A"] + ["B"] * rest["B"] + ["C"] * rest["C"] + ["D"] * rest["D"])
    comp.emit(cNp.inverse().moves)
    comp.main = [1] * len(Fp)
    comp.prefix = 0
    comp.tail = ["A"] * N + comp.tail
    comp.arrange_tail(canonical_tail(final))

    const = universal_constants(g)
    dchi = euler_characteristic(Fp) - euler_characteristic(F)
    if enforce_hypotheses:
        dsig = 0
    else:
        dsig = signature(Fp).signature - signature(F).signature
    chi_gap = dchi + const["chi_AB"] * l - const["chi_DC"] * k
    sig_gap = dsig + const["sig_AB"] * l + const["sig_CD"] * k
    if chi_gap or sig_gap:
        raise LedgerContradiction(f"bookkeeping fails: chi {chi_gap}, sigma {sig_gap}")
    if enforce_hypotheses and (k or l):
        raise LedgerContradiction(f"hypotheses hold but k={k}, l={l}")

    ledger = StabilizationLedger(n, p - N, p, p, p, k, l, N)
    cert = MoveCertificate(comp.moves)
    start = F + padding(g, canonical_tail({x: p for x in "ABCD"}))
    end = Fp + padding(g, canonical_tail(final))
    if verify and not check_certificate(start, cert, end):
        raise LedgerContradiction("compiled certificate does not replay to F′")
    return StabilizationResult(ledger, cert, start, end, tuple(comp.trades))


# ---------------------------------------------------------------------------
# a small search

def bounded_search(F, Fp, budget: int = 10000, max_extra: int = 2,
                   allow_create: bool = True) -> DerivationCertificate | None:
    """Breadth-first search over ≡-moves; ``budget`` bounds the number of expanded states."""
    if isinstance(F, Factorization):
        F = SignedFactorization.positive(F)
    if isinstance(Fp, Factorization):
        Fp = SignedFactorization.positive(Fp)
    g = F.genus
    table = twist_table(g)
    names = _generator_names(table)
    start = tuple(F.signed_twists())
    goal = tuple(Fp.signed_twists())
    if start == goal:
        return DerivationCertificate()
    gens = sorted({names[t] for t, _ in start + goal if t in names},
                  key=lambda x: int(x[1:]))
    limit = max(len(start), len(goal)) + max_extra

    def successors(state):
        n = len(state)
        for i in range(1, n):
            if state[i - 1][1] > 0 and state[i][1] > 0:
                yield HurwitzR(i)
                yield HurwitzL(i)
            (x, sx), (y, sy) = state[i - 1], state[i]
            if sx == -sy and x == y:
                yield PairCancel(i)
        for i in range(n - 1):
            block = state[i:i + 3]
            if all(s > 0 and t in names for t, s in block[:2]):
                rel = _generator_relation(g, names[block[0][0]], names[block[1][0]])
                if rel == "commute":
                    yield Relation("commute", "fwd", i + 1)
                if (rel == "braid" and len(block) == 3 and block[2][1] > 0
                        and block[2][0] == block[0][0]):
                    yield Relation("braid", "fwd", i + 1)
        if allow_create and n + 2 <= limit:
            for i in range(1, n + 2):
                for gname in gens:
                    for sg in (1, -1):
                        yield PairCreate(i, gname, sg)

    seen = {start: None}
    queue = deque([start])
    expanded = 0
    while queue and expanded < budget:
        state = queue.popleft()
        expanded += 1
        for m in successors(state):
            nxt = tuple(apply_steps(list(state), [m], g))
            if nxt in seen:
                continue
            seen[nxt] = (state, m)
            if nxt == goal:
                path = []
                cur = nxt
                while seen[cur] is not None:
                    prev, mv = seen[cur]
                    path.append(mv)
                    cur = prev
                return DerivationCertificate(tuple(reversed(path)))
            queue.append(nxt)
    return None
