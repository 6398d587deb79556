"""Line-based text formats for factorizations, move certificates and derivations.

    genus 3
    factor a1 @ a2,a3^-1
    factor s1

Certificates hold one move per line (``R 4``, ``L 2``, ``CONJ a1,a2^-1``,
``SUBST chain fwd 7``). Derivations also allow ``PCREATE 3 a2`` (``a2^-1``
puts the inverse first), ``PCANCEL 3`` and ``REL braid fwd 5``.
'#' starts a comment.
"""
from __future__ import annotations

from .factorization import (Factor, Factorization, GlobalConj, HurwitzL, HurwitzR,
                            MoveCertificate, Subst)
from .mcg import format_word
from .stabilize import DerivationCertificate, PairCancel, PairCreate, Relation


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


def _lines(text: str):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line.split(None, 1)[0], line.split(None, 1)[1:]


def _conj(text: str, n: int) -> tuple:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        name, _, exp = tok.partition("^")
        if not name or exp not in ("", "-1"):
            raise ParseError(n, f"bad conjugator letter {tok!r}")
        out.append((name, -1 if exp else 1))
    return tuple(out)


def _int(tok: str, n: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(n, f"expected a position, got {tok!r}") from None
    if v < 1:
        raise ParseError(n, "positions are 1-based")
    return v


def parse_factorization(text: str) -> Factorization:
    genus = None
    factors = []
    for n, key, rest in _lines(text):
        if key == "genus":
            if genus is not None:
                raise ParseError(n, "genus given twice")
            try:
                genus = int(rest[0])
            except (IndexError, ValueError):
                raise ParseError(n, "genus needs an integer") from None
            if genus < 1:
                raise ParseError(n, "genus must be positive")
        elif key == "factor":
            if genus is None:
                raise ParseError(n, "factor before genus")
            if not rest:
                raise ParseError(n, "empty factor")
            base, _, conj = rest[0].partition("@")
            base = base.strip()
            f = Factor(base, _conj(conj, n) if conj.strip() else ())
            try:
                Factorization(genus, (f,))
            except (ValueError, AttributeError) as e:
                raise ParseError(n, str(e)) from None
            factors.append(f)
        else:
            raise ParseError(n, f"unknown keyword {key!r}")
    if genus is None:
        raise ParseError(0, "missing genus line")
    return Factorization(genus, tuple(factors))


def format_factorization(F: Factorization) -> str:
    return "".join([f"genus {F.genus}\n"] + [f"factor {f}\n" for f in F])


def _move(key: str, rest: list, n: int, derivation: bool):
    args = rest[0].split() if rest else []
    if key in ("R", "L") and len(args) == 1:
        i = _int(args[0], n)
        return HurwitzR(i) if key == "R" else HurwitzL(i)
    if key == "CONJ" and not derivation:
        if not rest:
            raise ParseError(n, "CONJ needs a word")
        return GlobalConj(_conj(rest[0], n))
    if key == "SUBST" and not derivation and len(args) == 3:
        kind, direction, start = args
        if kind not in ("chain", "lantern") or direction not in ("fwd", "bwd"):
            raise ParseError(n, f"bad SUBST arguments {rest[0]!r}")
        return Subst(kind, direction, _int(start, n))
    if key == "PCREATE" and derivation and len(args) == 2:
        name, _, exp = args[1].partition("^")
        if exp not in ("", "-1") or not name.startswith("a"):
            raise ParseError(n, f"bad PCREATE generator {args[1]!r}")
        return PairCreate(_int(args[0], n), name, -1 if exp else 1)
    if key == "PCANCEL" and derivation and len(args) == 1:
        return PairCancel(_int(args[0], n))
    if key == "REL" and derivation and len(args) == 3:
        kind, direction, pos = args
        if kind not in ("commute", "braid", "chain", "lantern") or direction not in ("fwd", "bwd"):
            raise ParseError(n, f"bad REL arguments {rest[0]!r}")
        return Relation(kind, direction, _int(pos, n))
    raise ParseError(n, f"cannot parse move {key} {' '.join(args)}".rstrip())


def parse_certificate(text: str) -> MoveCertificate:
    return MoveCertificate(tuple(_move(k, r, n, False) for n, k, r in _lines(text)))


def parse_derivation(text: str) -> DerivationCertificate:
    return DerivationCertificate(tuple(_move(k, r, n, True) for n, k, r in _lines(text)))


def format_move(m) -> str:
    if isinstance(m, HurwitzR):
        return f"R {m.i}"
    if isinstance(m, HurwitzL):
        return f"L {m.i}"
    if isinstance(m, GlobalConj):
        return f"CONJ {format_word(m.word)}"
    if isinstance(m, Subst):
        return f"SUBST {m.kind} {m.direction} {m.start}"
    if isinstance(m, PairCreate):
        return f"PCREATE {m.i} {m.gen}" + ("^-1" if m.sign < 0 else "")
    if isinstance(m, PairCancel):
        return f"PCANCEL {m.i}"
    if isinstance(m, Relation):
        return f"REL {m.kind} {m.direction} {m.pos}"
    raise TypeError(f"not a move: {m!r}")


def format_certificate(cert) -> str:
    return "".join(format_move(m) + "\n" for m in cert)


def format_report(items) -> str:
    """key: value lines."""
    return "".join(f"{k}: {v}\n" for k, v in items)
