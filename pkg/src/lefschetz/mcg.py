"""The faithful action of Map_{g,1} on F_2g and its homology shadow.

Generators are named ``a0``..``a{2g}`` (chain twists plus c_0) and
``s1``..``s{g//2}`` (separating twists). An MCG word is a tuple of
``(name, sign)`` letters read left to right: the first letter acts first.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .freegroup import (Automorphism, abelian_vector, commutator, compose, compose_all,
                        curve_key, cyclic_reduce, inverse, multiply, power)
from .ribbon import derived_curves, derived_twists

_GEN = re.compile(r"^([as])(\d+)$")


def generator_names(g: int) -> list[str]:
    names = [f"a{i}" for i in range(0 if g >= 2 else 1, 2 * g + 1)]
    return names + [f"s{h}" for h in range(1, g // 2 + 1)]


def check_generator(name: str, g: int) -> str:
    if name not in generator_names(g):
        raise ValueError(f"generator {name!r} out of range for genus {g}")
    return name


def separating_type(name: str) -> int:
    """h for s_h, 0 for the non-separating a_i."""
    kind, idx = _GEN.match(name).groups()
    return int(idx) if kind == "s" else 0


def word_inverse(w) -> tuple:
    return tuple((gen, -s) for gen, s in reversed(w))


def word_reduce(w) -> tuple:
    out: list = []
    for gen, s in w:
        if out and out[-1] == (gen, -s):
            out.pop()
        else:
            out.append((gen, s))
    return tuple(out)


def chain(*indices, times: int = 1) -> tuple:
    """Positive word a_{i1} a_{i2} ... repeated ``times``."""
    return tuple((f"a{i}", 1) for i in indices) * times


_TOKEN = re.compile(r"\(|\)(?:\^(-?\d+))?|[as]\d+(?:\^-?1)?")


def parse_word(text: str, g: int | None = None) -> tuple:
    """Parse ``"a1 a2^-1 (a0 a2)^3"``; commas and spaces separate letters."""
    stack: list[list] = [[]]
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos] in " ,\t*":
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        tok = m.group(0)
        pos = m.end()
        if tok == "(":
            stack.append([])
        elif tok.startswith(")"):
            if len(stack) == 1:
                raise ValueError("unbalanced ')'")
            inner = tuple(stack.pop())
            e = int(m.group(1)) if m.group(1) is not None else 1
            if e < 0:
                inner, e = word_inverse(inner), -e
            stack[-1].extend(inner * e)
        else:
            name, _, exp = tok.partition("^")
            if g is not None:
                check_generator(name, g)
            stack[-1].append((name, -1 if exp == "-1" else 1))
    if len(stack) != 1:
        raise ValueError("unbalanced '('")
    return tuple(stack[0])


def separating_chain_word(h: int, g: int) -> tuple:
    """s_h as a positive word: (a_{2g-2h+1}···a_{2g})^{4h+2}."""
    return chain(*range(2 * g - 2 * h + 1, 2 * g + 1), times=4 * h + 2)


def expand_separating(w, g: int) -> tuple:
    """Replace each s_h letter by its chain word, so the result uses only a_i."""
    out = []
    for gen, s in w:
        h = separating_type(gen)
        if h:
            piece = separating_chain_word(h, g)
            out.extend(piece if s == 1 else word_inverse(piece))
        else:
            out.append((gen, s))
    return word_reduce(out)


def format_word(w, sep: str = ",") -> str:
    return sep.join(gen if s == 1 else f"{gen}^-1" for gen, s in w)


def boundary_word(g: int, h: int | None = None) -> tuple:
    """∂_h = ∏_{i≤h}[x_{2i-1}, x_{2i}]; h defaults to g."""
    h = g if h is None else h
    return multiply(*(commutator((2 * i - 1,), (2 * i,)) for i in range(1, h + 1)))


def symplectic_form(g: int, eps: int) -> np.ndarray:
    J = np.zeros((2 * g, 2 * g), dtype=object)
    for j in range(g):
        J[2 * j, 2 * j + 1] = eps
        J[2 * j + 1, 2 * j] = -eps
    return J


def abelianize(f: Automorphism) -> np.ndarray:
    """Integer matrix of the induced map on H_1; column k is the image of x_k."""
    n = f.rank
    M = np.zeros((n, n), dtype=object)
    for k, im in enumerate(f.images):
        M[:, k] = abelian_vector(im, n)
    return M


@dataclass(frozen=True)
class TwistTable:
    genus: int
    twist_autos: dict
    inverse_autos: dict
    curves: dict
    homology_classes: dict
    pairing: np.ndarray
    boundary: tuple

    @property
    def rank(self) -> int:
        return 2 * self.genus

    def pair(self, u, v) -> int:
        """⟨u, v⟩ = uᵀ J v."""
        return int(np.dot(np.asarray(u, dtype=object), self.pairing.dot(np.asarray(v, dtype=object))))


def _primitive(v):
    from math import gcd
    d = 0
    for x in v:
        d = gcd(d, int(x))
    return tuple(int(x) // d for x in v)


@lru_cache(maxsize=None)
def twist_table(g: int) -> TwistTable:
    if g < 1:
        raise ValueError("genus must be at least 1")
    n = 2 * g
    twists, inverses, curves = {}, {}, {}
    loops = derived_curves(g)
    for i, (pos, neg) in derived_twists(g).items():
        twists[f"a{i}"] = Automorphism(n, pos)
        inverses[f"a{i}"] = Automorphism(n, neg)
        curves[f"a{i}"] = loops[i]
    for h in range(1, g // 2 + 1):
        d = boundary_word(g, h)
        di = inverse(d)
        twists[f"s{h}"] = Automorphism(n, tuple(
            multiply(d, (k,), di) if k <= 2 * h else (k,) for k in range(1, n + 1)))
        inverses[f"s{h}"] = Automorphism(n, tuple(
            multiply(di, (k,), d) if k <= 2 * h else (k,) for k in range(1, n + 1)))
        curves[f"s{h}"] = d

    # homology classes, read off the transvections; signs follow the based loops
    eye = np.identity(n, dtype=object)
    classes = {}
    for name, A in twists.items():
        if name.startswith("s"):
            continue
        D = abelianize(A) - eye
        col = next(D[:, k] for k in range(n) if any(D[:, k]))
        c = _primitive(col)
        loop = abelian_vector(curves[name], n)
        if c == tuple(-x for x in loop):
            c = loop
        if c != loop:
            raise AssertionError(f"twist {name} disagrees with its curve in homology")
        classes[name] = c

    # the pairing sign is whichever makes every twist a transvection x -> x + <x,c>c
    pairing = None
    for eps in (1, -1):
        J = symplectic_form(g, eps)
        ok = True
        for name, c in classes.items():
            cv = np.array(c, dtype=object)
            T = eye + np.outer(cv, J.dot(cv))
            if not np.array_equal(T, abelianize(twists[name])):
                ok = False
                break
        if ok:
            pairing = J
            break
    if pairing is None:
        raise AssertionError("no symplectic sign makes the twists transvections")
    return TwistTable(g, twists, inverses, curves, classes, pairing, boundary_word(g))


def _letter_auto(table: TwistTable, gen: str, s: int) -> Automorphism:
    try:
        return table.twist_autos[gen] if s == 1 else table.inverse_autos[gen]
    except KeyError:
        raise ValueError(f"generator {gen!r} out of range for genus {table.genus}") from None


def mcg_to_auto(w, table: TwistTable) -> Automorphism:
    return compose_all((_letter_auto(table, gen, s) for gen, s in w), table.rank)


def mcg_equal(w1, w2, table: TwistTable) -> bool:
    return mcg_to_auto(w1, table) == mcg_to_auto(w2, table)


def apply_word(w, table: TwistTable, element) -> tuple:
    """Image of a free-group element under the mapping class of ``w``."""
    for gen, s in w:
        element = _letter_auto(table, gen, s).apply(element)
    return element


def boundary_conjugation(table: TwistTable, m: int) -> Automorphism:
    return Automorphism.conjugation(table.rank, power(table.boundary, m))


def detect_boundary_power(f: Automorphism, table: TwistTable) -> int | None:
    """m with f = (x -> ∂^m x ∂^-m), or None."""
    if f.is_identity():
        return 0
    # ∂^m x1 ∂^-m has length 8g·m + 1 for m > 0; for m < 0 the x1 cancels once
    n = len(f.images[0])
    step = 8 * table.genus
    if (n - 1) % step == 0:
        m = (n - 1) // step
    elif (n + 1) % step == 0:
        m = -((n + 1) // step)
    else:
        return None
    if m == 0:
        return None
    return m if f == boundary_conjugation(table, m) else None


def is_central(f: Automorphism, table: TwistTable) -> bool:
    return detect_boundary_power(f, table) is not None


def intersecting_pairs(g: int) -> set:
    """Pairs {i, j} of chain generators whose curves meet (Figure 1 pattern)."""
    pairs = {frozenset((i, i + 1)) for i in range(1, 2 * g)}
    if g >= 2:
        pairs.add(frozenset((0, 4)))
    return pairs


def relators(g: int) -> list[tuple[str, tuple, tuple]]:
    """Defining relations as (name, lhs, rhs) word pairs."""
    idx = [int(n[1:]) for n in generator_names(g) if n.startswith("a")]
    meet = intersecting_pairs(g)
    out = []
    for p, i in enumerate(idx):
        for j in idx[p + 1:]:
            x, y = (f"a{i}", 1), (f"a{j}", 1)
            if frozenset((i, j)) in meet:
                out.append((f"braid a{i} a{j}", (x, y, x), (y, x, y)))
            else:
                out.append((f"commute a{i} a{j}", (x, y), (y, x)))
    if g >= 2:
        out.append(("chain", chain(0, 2, 3, 4, times=10), chain(0, 1, 2, 3, 4, times=6)))
    if g >= 3:
        out.append(("lantern", chain(0, 1, 2, 3, 4, 5, 6, times=9),
                    chain(0, 2, 3, 4, 5, 6, times=12)))
    return out


def failing_relators(g: int) -> list[str]:
    """Names of relators that do not hold, plus the hyperelliptic check."""
    t = twist_table(g)
    bad = [name for name, lhs, rhs in relators(g) if not mcg_equal(lhs, rhs, t)]
    hyp = mcg_to_auto(chain(*range(1, 2 * g + 1), times=4 * g + 2), t)
    if hyp != boundary_conjugation(t, 1):
        bad.append("hyperelliptic")
    return bad


# ---------------------------------------------------------------------------
# Twists identified by their curves

_AUTO_CACHE: dict = {}


class Twist:
    """A Dehn twist, identified by the free homotopy class of its curve.

    The curve is carried as a based loop; two twists are equal iff their
    unoriented curve classes agree. The action on π₁ is derived lazily and
    cached by curve class, so long Hurwitz replays only push loops around.
    """

    __slots__ = ("genus", "loop", "sep", "_key", "_recipe")

    def __init__(self, genus, loop, sep, recipe):
        self.genus = genus
        self.loop = cyclic_reduce(loop)
        self.sep = sep
        self._key = None
        self._recipe = recipe

    @classmethod
    def generator(cls, name: str, table: TwistTable) -> "Twist":
        return cls(table.genus, table.curves[name], separating_type(name), ("gen", name))

    @classmethod
    def of_factor(cls, base: str, conj, table: TwistTable) -> "Twist":
        """(base)_conj: the twist along conj(c_base)."""
        check_generator(base, table.genus)
        t = cls.generator(base, table)
        if not conj:
            return t
        loop = apply_word(conj, table, table.curves[base])
        return cls(table.genus, loop, t.sep, ("word", t, tuple(conj)))

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = curve_key(self.loop)
        return self._key

    def __eq__(self, other):
        return isinstance(other, Twist) and self.genus == other.genus and self.key == other.key

    def __hash__(self):
        return hash((self.genus, self.key))

    def __repr__(self):
        return f"Twist(sep={self.sep}, loop={self.loop})"

    def homology(self) -> tuple:
        return abelian_vector(self.loop, 2 * self.genus)

    def autos(self) -> tuple[Automorphism, Automorphism]:
        """(twist, inverse twist) as automorphisms of F_2g."""
        ck = (self.genus, self.key)
        hit = _AUTO_CACHE.get(ck)
        if hit is not None:
            return hit
        # materialize iteratively along the recipe chain
        chain_ = []
        node = self
        while True:
            hit = _AUTO_CACHE.get((node.genus, node.key))
            if hit is not None or node._recipe[0] == "gen":
                break
            chain_.append(node)
            node = node._recipe[1]
        table = twist_table(self.genus)
        if hit is None:
            name = node._recipe[1]
            hit = (table.twist_autos[name], table.inverse_autos[name])
            _AUTO_CACHE[(node.genus, node.key)] = hit
        for nd in reversed(chain_):
            T, Ti = _AUTO_CACHE[(nd._recipe[1].genus, nd._recipe[1].key)]
            if nd._recipe[0] == "word":
                conj = nd._recipe[2]
                P = mcg_to_auto(conj, table)
                Pi = mcg_to_auto(word_inverse(conj), table)
            else:
                S, Si = nd._recipe[2].autos()
                P, Pi = (S, Si) if nd._recipe[3] == 1 else (Si, S)
            hit = (compose(compose(Pi, T), P), compose(compose(Pi, Ti), P))
            _AUTO_CACHE[(nd.genus, nd.key)] = hit
        return _AUTO_CACHE[(self.genus, self.key)]

    def conjugated(self, by: "Twist", sign: int = 1) -> "Twist":
        """(self)_{by^sign}: the twist along by^sign(c)."""
        T, Ti = by.autos()
        f = T if sign == 1 else Ti
        return Twist(self.genus, f.apply(self.loop), self.sep, ("twist", self, by, sign))

    def conjugated_by_word(self, w, table: TwistTable) -> "Twist":
        if not w:
            return self
        return Twist(self.genus, apply_word(w, table, self.loop), self.sep, ("word", self, tuple(w)))


def clear_twist_cache() -> None:
    _AUTO_CACHE.clear()
